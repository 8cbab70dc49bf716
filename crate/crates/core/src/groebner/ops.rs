use alloc::string::String;
use alloc::vec::Vec;

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial};

/// `I ∩ k[x_{K+1}, ..., x_n]`, returned as an ideal of the same ring.
pub fn eliminate_variables(ideal: &Ideal, first_k: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    if first_k > ring.nvars() {
        return Err(Error::TooManyVariables {
            requested: first_k,
            available: ring.nvars(),
        });
    }
    if first_k == 0 {
        return Ideal::new(ring, ideal.canonical_generators());
    }
    let gb = ideal.groebner_basis(MonomialOrder::Elimination(first_k));
    let gens = gb
        .elements()
        .iter()
        .filter(|g| g.support().iter().all(|&v| v >= first_k))
        .cloned()
        .collect();
    Ideal::new(ring, gens)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
pub fn intersect_ideals(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.nvars();
    let t_name: String = ring.fresh_name("t");
    let big = ring.extended(&[t_name], &[])?;
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::variable(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for f in i.generators() {
        gens.push(&t * &f.rename_into(&big, &shift)?);
    }
    for g in j.generators() {
        gens.push(&one_minus_t * &g.rename_into(&big, &shift)?);
    }
    let elim = eliminate_variables(&Ideal::new(&big, gens)?, 1)?;
    // t no longer occurs, so its slot in the map is irrelevant
    let back: Vec<usize> = core::iter::once(0).chain(0..n).collect();
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.rename_into(ring, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `(I : J) = { f : f·J ⊆ I }`.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !same_ring(i.ring(), j.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = i.ring();
    let mut acc: Option<Ideal> = None;
    for g in j.generators().iter().filter(|g| !g.is_zero()) {
        let principal = Ideal::new(ring, alloc::vec![g.clone()])?;
        let meet = intersect_ideals(i, &principal)?;
        let quotients = meet
            .generators()
            .iter()
            .map(|h| h.exact_div(g))
            .collect::<Result<Vec<_>>>()?;
        let part = Ideal::new(ring, quotients)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect_ideals(&prev, &part)?,
        });
    }
    match acc {
        None => Ok(Ideal::unit(ring)),
        Some(c) => Ideal::new(ring, c.canonical_generators()),
    }
}

/// Whether `f ∈ √I`, decided by `1 ∈ I + (1 - y·f)` with a fresh `y`
/// appended after the existing variables.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    let ring = ideal.ring();
    if !same_ring(f.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let n = ring.nvars();
    let y_name = ring.fresh_name("y");
    let big = ring.extended(&[], &[y_name])?;
    let keep: Vec<usize> = (0..n).collect();
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.rename_into(&big, &keep))
        .collect::<Result<Vec<_>>>()?;
    let y = Polynomial::variable(&big, n);
    let fy = &y * &f.rename_into(&big, &keep)?;
    gens.push(&Polynomial::one(&big) - &fy);
    Ok(Ideal::new(&big, gens)?.is_unit())
}

/// Monomials outside the leading-term ideal of `I` together with their
/// count, the length of `S/I`.
pub fn standard_monomial_basis(
    ideal: &Ideal,
    order: MonomialOrder,
) -> Result<(Vec<Monomial>, usize)> {
    let basis = ideal.groebner_basis(order).standard_monomials()?;
    let n = basis.len();
    Ok((basis, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::RingContext;
    use alloc::string::ToString;
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(FieldSpec::Rationals, vars.iter().copied()).unwrap()
    }

    fn gens(i: &Ideal) -> Vec<String> {
        i.canonical_generators()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn twisted_cubic_elimination() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
        let e = eliminate_variables(&i, 1).unwrap();
        let shown: Vec<_> = e.generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["y^3 - z^2"]);
        assert!(
            gens(&eliminate_variables(&Ideal::parse(&r, &["x"]).unwrap(), 1).unwrap()).is_empty()
        );
        assert!(eliminate_variables(&i, 0).unwrap().same_ideal(&i).unwrap());
        assert!(matches!(
            eliminate_variables(&i, 4),
            Err(Error::TooManyVariables { .. })
        ));
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(gens(&intersect_ideals(&x, &y).unwrap()), vec!["x*y"]);
        assert!(intersect_ideals(&x, &x).unwrap().same_ideal(&x).unwrap());
        assert!(intersect_ideals(&x, &Ideal::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y"]);
        let c = colon_ideal(
            &Ideal::parse(&r, &["x^3"]).unwrap(),
            &Ideal::parse(&r, &["x^2"]).unwrap(),
        )
        .unwrap();
        assert_eq!(gens(&c), vec!["x"]);
        let i = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        assert!(colon_ideal(&i, &Ideal::unit(&r))
            .unwrap()
            .same_ideal(&i)
            .unwrap());
        let c = colon_ideal(&i, &Ideal::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert_eq!(gens(&c), vec!["x", "y"]);
    }

    #[test]
    fn radicals() {
        let r = ring(&["x", "y"]);
        let p = |s| crate::parse_polynomial(s, &r).unwrap();
        assert!(radical_member(&p("x"), &Ideal::parse(&r, &["x^2"]).unwrap()).unwrap());
        assert!(!radical_member(&p("x"), &Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        assert!(radical_member(&p("x + y"), &Ideal::parse(&r, &["x^2", "y^2"]).unwrap()).unwrap());
    }
}
