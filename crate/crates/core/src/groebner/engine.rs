//! Buchberger's algorithm over sparse vectors of the free module `S^r`.
//!
//! Ideals are the rank-one case with every term at position 0. Terms are
//! ordered position-over-term: a lower position is larger, ties are broken
//! by the monomial order.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::{FieldSpec, Scalar};
use crate::poly::{Monomial, MonomialOrder};

pub(crate) type Vector = Vec<(usize, Monomial, Scalar)>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Engine {
    pub order: MonomialOrder,
    pub field: FieldSpec,
    /// Disables the coprime-leading-term criterion, which is only valid for
    /// ideals.
    pub module: bool,
}

impl Engine {
    #[inline]
    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    /// Sorts decreasingly, merging equal terms and dropping zeros.
    pub fn normalize(&self, mut v: Vector) -> Vector {
        v.sort_by(|a, b| self.cmp((b.0, &b.1), (a.0, &a.1)));
        let mut out: Vector = Vec::with_capacity(v.len());
        for (p, m, c) in v {
            if let Some(last) = out.last_mut() {
                if last.0 == p && last.1 == m {
                    last.2 = self.field.add(&last.2, &c);
                    continue;
                }
                if last.2.is_zero() {
                    out.pop();
                }
            }
            out.push((p, m, c));
        }
        if out.last().is_some_and(|t| t.2.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn monic(&self, mut v: Vector) -> Vector {
        if let Some(lc) = v.first().map(|t| t.2.clone()) {
            if !lc.is_one() {
                let inv = self.field.inv(&lc).unwrap();
                for t in v.iter_mut() {
                    t.2 = self.field.mul(&t.2, &inv);
                }
            }
        }
        v
    }

    /// `f - c * m * g` for sorted `f`, `g`.
    pub fn sub_scaled(
        &self,
        f: &[(usize, Monomial, Scalar)],
        c: &Scalar,
        m: &Monomial,
        g: &[(usize, Monomial, Scalar)],
    ) -> Vector {
        let field = self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<(usize, Monomial)> = g.first().map(|t| (t.0, t.1.mul(m)));
        while i < f.len() {
            let Some((gp, gm)) = shifted.as_ref() else {
                break;
            };
            match self.cmp((f[i].0, &f[i].1), (*gp, gm)) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let cc = field.neg(&field.mul(c, &g[j].2));
                    let (gp, gm) = shifted.take().unwrap();
                    out.push((gp, gm, cc));
                    j += 1;
                    shifted = g.get(j).map(|t| (t.0, t.1.mul(m)));
                }
                Ordering::Equal => {
                    let cc = field.sub(&f[i].2, &field.mul(c, &g[j].2));
                    if !cc.is_zero() {
                        out.push((f[i].0, f[i].1.clone(), cc));
                    }
                    i += 1;
                    j += 1;
                    shifted = g.get(j).map(|t| (t.0, t.1.mul(m)));
                }
            }
        }
        out.extend(f[i..].iter().cloned());
        if let Some((gp, gm)) = shifted {
            out.push((gp, gm, field.neg(&field.mul(c, &g[j].2))));
            for t in &g[j + 1..] {
                out.push((t.0, t.1.mul(m), field.neg(&field.mul(c, &t.2))));
            }
        }
        out
    }

    /// Fully reduces `f` by the monic `basis`.
    pub fn reduce(&self, mut f: Vector, basis: &[Vector]) -> Vector {
        let mut rem: Vector = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let (p, m, c) = &f[start];
            let divisor = basis
                .iter()
                .find(|g| g.first().is_some_and(|lt| lt.0 == *p && lt.1.divides(m)));
            match divisor {
                Some(g) => {
                    let q = m.div(&g[0].1);
                    let c = c.clone();
                    f = self.sub_scaled(&f[start + 1..], &c, &q, &g[1..]);
                    start = 0;
                }
                None => {
                    rem.push(f[start].clone());
                    start += 1;
                }
            }
        }
        rem
    }

    fn s_vector(&self, f: &Vector, g: &Vector) -> Vector {
        let lcm = f[0].1.lcm(&g[0].1);
        let mf = lcm.div(&f[0].1);
        let mg = lcm.div(&g[0].1);
        let one = self.field.one();
        let scaled_f: Vector = f[1..]
            .iter()
            .map(|(p, m, c)| (*p, m.mul(&mf), c.clone()))
            .collect();
        self.sub_scaled(&scaled_f, &one, &mg, &g[1..])
    }

    /// Reduced Gröbner basis of the span of `gens`, sorted by leading term,
    /// largest first.
    pub fn groebner(&self, gens: Vec<Vector>) -> Vec<Vector> {
        let mut gens: Vec<Vector> = gens
            .into_iter()
            .map(|g| self.normalize(g))
            .filter(|g| !g.is_empty())
            .collect();
        gens.sort_by(|a, b| self.cmp((a[0].0, &a[0].1), (b[0].0, &b[0].1)));

        let mut basis: Vec<Vector> = Vec::new();
        let mut queue: BTreeSet<(usize, usize)> = BTreeSet::new();
        let add = |basis: &mut Vec<Vector>, queue: &mut BTreeSet<(usize, usize)>, v: Vector| {
            let j = basis.len();
            for (i, g) in basis.iter().enumerate() {
                if g[0].0 != v[0].0 {
                    continue;
                }
                if !self.module && g[0].1.is_coprime(&v[0].1) {
                    continue;
                }
                queue.insert((i, j));
            }
            basis.push(v);
        };

        for g in gens {
            let r = self.reduce(g, &basis);
            if !r.is_empty() {
                let r = self.monic(r);
                if r[0].1.is_one() && !self.module {
                    return alloc::vec![r];
                }
                add(&mut basis, &mut queue, r);
            }
        }

        while let Some(&(i, j)) = queue
            .iter()
            .min_by_key(|&&(i, j)| (basis[i][0].1.lcm(&basis[j][0].1).degree(), j, i))
        {
            queue.remove(&(i, j));
            let lcm = basis[i][0].1.lcm(&basis[j][0].1);
            let pos = basis[i][0].0;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].0 == pos
                    && basis[k][0].1.divides(&lcm)
                    && !queue.contains(&(i.min(k), i.max(k)))
                    && !queue.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &basis[j]);
            let r = self.reduce(s, &basis);
            if !r.is_empty() {
                let r = self.monic(r);
                if r[0].1.is_one() && !self.module {
                    return alloc::vec![r];
                }
                add(&mut basis, &mut queue, r);
            }
        }
        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<Vector>) -> Vec<Vector> {
        let mut minimal: Vec<Vector> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(k, h)| {
                k != i && h[0].0 == g[0].0 && h[0].1.divides(&g[0].1) && (h[0].1 != g[0].1 || k < i)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        for i in 0..minimal.len() {
            let g = core::mem::take(&mut minimal[i]);
            let others: Vec<Vector> = minimal.iter().filter(|h| !h.is_empty()).cloned().collect();
            let head = g[0].clone();
            let tail = self.reduce(g[1..].to_vec(), &others);
            let mut v = alloc::vec![head];
            v.extend(tail);
            minimal[i] = self.monic(v);
        }
        minimal.sort_by(|a, b| self.cmp((b[0].0, &b[0].1), (a[0].0, &a[0].1)));
        minimal
    }
}
