//! Integral closure of monomial ideals through their Newton polyhedra.

use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Monomial, Polynomial, RingContext};

/// Exponent vectors of a monomial ideal, kept as a minimal generating set
/// in lex-decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdealData {
    nvars: usize,
    generators: Vec<Vec<u32>>,
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

impl MonomialIdealData {
    pub fn new(nvars: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut all: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            if v.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: v.len(),
                });
            }
            all.push(v);
        }
        all.sort_by(|a, b| b.cmp(a));
        all.dedup();
        let generators = all
            .iter()
            .filter(|v| !all.iter().any(|w| w != *v && dominates(v, w)))
            .cloned()
            .collect();
        Ok(MonomialIdealData { nvars, generators })
    }

    /// Reads the exponents of an ideal generated by monomials.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let mut vectors = Vec::new();
        for g in ideal.generators() {
            match g.terms() {
                [] => {}
                [(m, _)] => vectors.push(m.exponents().to_vec()),
                _ => return Err(Error::NotMonomial(g.to_string())),
            }
        }
        MonomialIdealData::new(ideal.ring().nvars(), vectors)
    }

    pub fn to_ideal(&self, ring: &Arc<RingContext>) -> Result<Ideal> {
        if ring.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: ring.nvars(),
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|e| Polynomial::from_monomial(ring, Monomial::new(e.clone())))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Whether `x^u` lies in the ideal itself.
    pub fn contains(&self, u: &[u32]) -> bool {
        self.generators.iter().any(|g| dominates(u, g))
    }
}

/// Whether `A x = b, x ≥ 0` has a solution, for `b ≥ 0`. Phase one of the
/// simplex method with one artificial variable per row and Bland's rule.
fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let width = cols + rows;
    // tableau rows: [A | I | b]; objective: minimize the sum of artificials
    let mut t: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r = a[i].clone();
            r.extend((0..rows).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut basis: Vec<usize> = (cols..width).collect();
    // reduced costs of the phase-one objective, last entry is -value
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); width + 1];
    for row in &t {
        for (j, x) in row.iter().enumerate() {
            if j < cols || j == width {
                cost[j] -= x;
            }
        }
    }
    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // the phase-one objective is bounded below, so a pivot row exists
        let (r, _) = leave.expect("bounded phase-one problem");
        let pivot = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x -= &f * p;
        }
        basis[r] = enter;
    }
    cost[width].is_zero()
}

/// Whether `u` lies in the Newton polyhedron `conv(generators) + R^n_{≥0}`.
pub fn newton_membership(u: &[u32], data: &MonomialIdealData) -> Result<bool> {
    let n = data.nvars;
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    let gens = &data.generators;
    if gens.is_empty() {
        return Ok(false);
    }
    if data.contains(u) {
        return Ok(true);
    }
    // unknowns: λ_e for each generator, then one slack per coordinate
    let int = |x: u32| BigRational::from_integer(x.into());
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigRational> = gens.iter().map(|e| int(e[j])).collect();
            row.extend((0..n).map(|k| {
                if k == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let mut sum_row = vec![BigRational::one(); gens.len()];
    sum_row.extend((0..n).map(|_| BigRational::zero()));
    a.push(sum_row);
    let mut b: Vec<BigRational> = u.iter().map(|&x| int(x)).collect();
    b.push(BigRational::one());
    Ok(feasible(&a, &b))
}

/// Minimal generators of the integral closure `ā`: the lattice points of
/// the Newton polyhedron inside the box `[0, max_j]`.
pub fn monomial_integral_closure(data: &MonomialIdealData) -> MonomialIdealData {
    let n = data.nvars;
    if data.generators.is_empty() {
        return data.clone();
    }
    let bounds: Vec<u32> = (0..n)
        .map(|j| data.generators.iter().map(|e| e[j]).max().unwrap())
        .collect();
    let mut members = Vec::new();
    let mut point = vec![0u32; n];
    loop {
        if newton_membership(&point, data).unwrap() {
            members.push(point.clone());
        }
        let mut j = 0;
        while j < n && point[j] == bounds[j] {
            point[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        point[j] += 1;
    }
    MonomialIdealData::new(n, members).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn data(v: &[&[u32]]) -> MonomialIdealData {
        MonomialIdealData::new(v[0].len(), v.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn membership() {
        let d = data(&[&[2, 0], &[0, 2]]);
        assert!(newton_membership(&[1, 1], &d).unwrap());
        assert!(!newton_membership(&[1, 0], &d).unwrap());
        assert!(newton_membership(&[2, 0], &d).unwrap());
        assert!(!newton_membership(&[0, 0], &d).unwrap());
        assert!(matches!(
            newton_membership(&[1], &d),
            Err(Error::DimensionMismatch { .. })
        ));
        let d = data(&[&[3, 0], &[0, 3]]);
        assert!(newton_membership(&[2, 1], &d).unwrap());
        assert!(!newton_membership(&[1, 1], &d).unwrap());
    }

    #[test]
    fn closures() {
        let c = monomial_integral_closure(&data(&[&[2, 0], &[0, 2]]));
        assert_eq!(c.generators(), &[vec![2, 0], vec![1, 1], vec![0, 2]]);
        let c = monomial_integral_closure(&data(&[&[3, 0], &[0, 3]]));
        assert_eq!(
            c.generators(),
            &[vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        let p = data(&[&[2, 3]]);
        assert_eq!(monomial_integral_closure(&p), p);
        let c = monomial_integral_closure(&data(&[&[4, 0], &[1, 1], &[0, 4]]));
        assert_eq!(c.generators(), &[vec![4, 0], vec![1, 1], vec![0, 4]]);
    }

    #[test]
    fn reduction_and_ideals() {
        let d = data(&[&[2, 1], &[1, 0], &[1, 0], &[0, 3]]);
        assert_eq!(d.generators(), &[vec![1, 0], vec![0, 3]]);
        let r = RingContext::new(FieldSpec::Rationals, ["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x^2", "x*y^3"]).unwrap();
        let m = MonomialIdealData::from_ideal(&i).unwrap();
        assert_eq!(m.generators(), &[vec![2, 0], vec![1, 3]]);
        assert!(m.to_ideal(&r).unwrap().same_ideal(&i).unwrap());
        let bad = Ideal::parse(&r, &["x + y"]).unwrap();
        assert!(matches!(
            MonomialIdealData::from_ideal(&bad),
            Err(Error::NotMonomial(_))
        ));
    }
}
