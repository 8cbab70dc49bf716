#![allow(dead_code)]

use std::sync::Arc;

use jetclosure_core::groebner::Ideal;
use jetclosure_core::{FieldSpec, Monomial, Polynomial, RingContext};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub type Terms = Vec<(Vec<u32>, i64)>;

pub fn ring(field: FieldSpec, vars: &[&str]) -> Arc<RingContext> {
    RingContext::new(field, vars.iter().copied()).unwrap()
}

pub fn q_ring(vars: &[&str]) -> Arc<RingContext> {
    ring(FieldSpec::Rationals, vars)
}

pub fn poly(ring: &Arc<RingContext>, terms: &Terms) -> Polynomial {
    let field = ring.field();
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.clone()), field.from_i64(*c))),
    )
    .unwrap()
}

pub fn parse(ring: &Arc<RingContext>, s: &str) -> Polynomial {
    jetclosure_core::parse_polynomial(s, ring).unwrap()
}

pub fn ideal(ring: &Arc<RingContext>, gens: &[&str]) -> Ideal {
    Ideal::parse(ring, gens).unwrap()
}

fn cap_degree(mut e: Vec<u32>, max: u32) -> Vec<u32> {
    while e.iter().sum::<u32>() > max {
        let j = (0..e.len()).max_by_key(|&j| e[j]).unwrap();
        e[j] -= 1;
    }
    e
}

/// Random sparse polynomials as term lists: exponents of total degree in
/// `min..=max`, small integer coefficients.
pub fn terms(nvars: usize, min: u32, max: u32, count: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec(
        (prop::collection::vec(0..=max, nvars), -4i64..=4).prop_map(move |(e, c)| {
            let mut e = cap_degree(e, max);
            while nvars > 0 && e.iter().sum::<u32>() < min {
                e[0] += 1;
            }
            (e, c)
        }),
        0..=count,
    )
}

/// Monomials of total degree below `bound`, in a fixed order.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().sum();
            for k in 0..bound.saturating_sub(used) {
                let mut f = e.clone();
                f.push(k);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = BigRational::one() / rows[rank][col].clone();
        let pivot: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// `dim_Q S/I` for an ideal over Q containing every monomial of degree
/// `bound`, by linear algebra on `S/m^bound` without Gröbner bases.
pub fn colength_by_linear_algebra(ideal: &Ideal, bound: u32) -> usize {
    let n = ideal.ring().nvars();
    let basis = monomials_below(n, bound);
    let index = |e: &[u32]| basis.iter().position(|b| b.as_slice() == e);
    let mut rows = Vec::new();
    for g in ideal.generators() {
        for u in &basis {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (m, c) in g.terms() {
                let e: Vec<u32> = m.exponents().iter().zip(u).map(|(a, b)| a + b).collect();
                if let Some(i) = index(&e) {
                    let c: BigRational = c.to_string().parse().unwrap();
                    row[i] += c;
                }
            }
            rows.push(row);
        }
    }
    basis.len() - rational_rank(rows)
}
