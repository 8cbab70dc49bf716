//! Jet closures, arc-closedness certificates and jet-support membership for
//! germs `R = k[x]_(x) / I`.
//!
//! Every closure at level `ℓ` is computed after replacing `a` by the
//! `m`-primary ideal `a' = a + I + m^{ℓ+1}`, which has the same level-`ℓ`
//! closure. On the finite-dimensional quotient `R/a'` the universal jet
//! `λ_ℓ` is a `k`-linear map into `(R_ℓ / a'_ℓ + m R_ℓ)[t]/t^{ℓ+1}`, and the
//! closure is `a'` plus its kernel.

mod gorenstein;
mod module;

use alloc::sync::Arc;
use alloc::vec::Vec;

pub use gorenstein::{
    gorenstein_walkthrough, matlis_embedding, minimal_power_exponent, socle_and_gorenstein,
    MatlisEmbedding, Socle, Walkthrough, WalkthroughStage,
};
pub use module::{module_jet_closure, ModuleClosure, ModuleMap, ModulePresentation};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{intersect_ideals, radical_member, Ideal};
use crate::jets::{fiber_ideal_in, JetRing};
use crate::linalg::nullspace_of_columns;
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, RingContext};

/// A germ presented as `k[x_1..x_n]` localized at the origin, modulo an
/// ideal contained in the maximal ideal `m = (x_1, ..., x_n)`.
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    ring: Arc<RingContext>,
    modulus: Ideal,
}

fn in_maximal_ideal(f: &Polynomial) -> bool {
    f.constant_term().is_zero()
}

impl LocalAlgebra {
    pub fn new(modulus: Ideal) -> Result<Self> {
        if !modulus.generators().iter().all(in_maximal_ideal) {
            return Err(Error::ModulusNotLocal);
        }
        Ok(LocalAlgebra {
            ring: modulus.ring().clone(),
            modulus,
        })
    }

    /// The regular germ at the origin of affine space.
    pub fn affine(ring: &Arc<RingContext>) -> Self {
        LocalAlgebra {
            ring: ring.clone(),
            modulus: Ideal::zero(ring),
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn maximal_ideal(&self) -> Ideal {
        Ideal::maximal(&self.ring)
    }

    /// `R/b`, presented by the modulus `I + b`.
    pub fn quotient(&self, b: &Ideal) -> Result<LocalAlgebra> {
        LocalAlgebra::new(self.modulus.sum(b)?)
    }

    /// `dim_k R`; fails with `NotArtinian` when the modulus is not
    /// `m`-primary.
    pub fn length(&self) -> Result<usize> {
        let len = self.modulus.colength().map_err(|_| Error::NotArtinian)?;
        // S/I has length len, so m^len ⊆ I exactly when I is m-primary
        let n = self.ring.nvars();
        for j in 0..n {
            let power =
                Polynomial::from_monomial(&self.ring, Monomial::variable(n, j).pow(len as u32));
            if !self.modulus.contains(&power)? {
                return Err(Error::NotArtinian);
            }
        }
        Ok(len)
    }

    /// `a + I`, checked to be proper.
    pub fn fold(&self, a: &Ideal) -> Result<Ideal> {
        if !same_ring(a.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let folded = self.modulus.sum(a)?;
        if !folded.generators().iter().all(in_maximal_ideal) {
            return Err(Error::NotProper);
        }
        Ok(folded)
    }
}

/// The level-`ℓ` jet closure of an ideal, with the data it was computed from.
#[derive(Clone, Debug)]
pub struct ClosureReport {
    pub level: usize,
    /// `a + I`.
    pub ideal: Ideal,
    /// `a + I + m^{ℓ+1}`.
    pub primary: Ideal,
    /// Reduced degrevlex basis of the closure.
    pub generators: Vec<Polynomial>,
    /// Kernel of `λ_ℓ` on `R/a'`, as combinations of standard monomials.
    pub kernel: Vec<Polynomial>,
    /// `dim_k R/a'`.
    pub dim_quotient: usize,
    /// `dim_k` of the closure's image in `R/a'`.
    pub dim_closure: usize,
}

impl ClosureReport {
    pub fn closure(&self) -> Ideal {
        Ideal::new(self.ideal.ring(), self.generators.clone()).unwrap()
    }
}

/// Kernel of the `k`-linear map `f ↦ (D_i f mod fiber)_i` on the span of
/// `basis`. `fiber` must be an ideal of `jr`'s ring containing `m R_ℓ`.
fn universal_jet_kernel(
    jr: &JetRing,
    fiber: &Ideal,
    basis: &[Monomial],
) -> Result<Vec<Polynomial>> {
    let ring = jr.base();
    let field = ring.field();
    let gb = fiber.groebner_basis(MonomialOrder::DegRevLex);
    let mut images: Vec<Vec<Polynomial>> = Vec::with_capacity(basis.len());
    for b in basis {
        let ds = jr.derivations(&Polynomial::from_monomial(ring, b.clone()))?;
        images.push(
            ds.iter()
                .map(|d| gb.normal_form(d))
                .collect::<Result<_>>()?,
        );
    }
    let kernel = nullspace_of_columns(field, &coordinate_columns(field, &images));
    Ok(kernel
        .into_iter()
        .map(|v| combination(ring, basis, &v))
        .collect())
}

/// Writes each list of polynomials as one column of coordinates, indexed
/// by (list position, monomial).
pub(crate) fn coordinate_columns(
    field: crate::FieldSpec,
    images: &[Vec<Polynomial>],
) -> Vec<Vec<Scalar>> {
    let mut index: Vec<(usize, Monomial)> = Vec::new();
    for img in images {
        for (i, p) in img.iter().enumerate() {
            for (m, _) in p.terms() {
                if !index.iter().any(|(j, n)| *j == i && n == m) {
                    index.push((i, m.clone()));
                }
            }
        }
    }
    images
        .iter()
        .map(|img| {
            index
                .iter()
                .map(|(i, m)| {
                    img.get(*i)
                        .map_or_else(|| field.zero(), |p| p.coefficient(m))
                })
                .collect()
        })
        .collect()
}

pub(crate) fn combination(
    ring: &Arc<RingContext>,
    basis: &[Monomial],
    coeffs: &[Scalar],
) -> Polynomial {
    let terms = basis
        .iter()
        .cloned()
        .zip(coeffs.iter().cloned())
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Polynomial::from_unsorted(ring, terms)
}

/// The level-`ℓ` jet closure `a^{jc_ℓ}` of `a` in the germ `algebra`.
pub fn jet_closure(algebra: &LocalAlgebra, a: &Ideal, level: usize) -> Result<ClosureReport> {
    let ideal = algebra.fold(a)?;
    let ring = algebra.ring();
    let primary = ideal.sum(&Ideal::maximal_power(ring, level as u32 + 1))?;
    let basis = primary
        .groebner_basis(MonomialOrder::DegRevLex)
        .standard_monomials()?;
    let jr = JetRing::new(ring, level)?;
    let fiber = fiber_ideal_in(&jr, &primary)?;
    let kernel = universal_jet_kernel(&jr, &fiber, &basis)?;
    let closure = primary.with_generators(kernel.iter().cloned())?;
    Ok(ClosureReport {
        level,
        generators: closure.canonical_generators(),
        dim_quotient: basis.len(),
        dim_closure: kernel.len(),
        kernel,
        ideal,
        primary,
    })
}

/// `C_ℓ = a^{jc_0} ∩ ... ∩ a^{jc_ℓ}` for `ℓ = 0..=max_level`.
pub fn cumulative_closure_chain(
    algebra: &LocalAlgebra,
    a: &Ideal,
    max_level: usize,
) -> Result<Vec<Ideal>> {
    let mut chain: Vec<Ideal> = Vec::with_capacity(max_level + 1);
    for level in 0..=max_level {
        chain.push(next_link(algebra, a, level, chain.last())?);
    }
    Ok(chain)
}

fn next_link(
    algebra: &LocalAlgebra,
    a: &Ideal,
    level: usize,
    prev: Option<&Ideal>,
) -> Result<Ideal> {
    let jc = jet_closure(algebra, a, level)?.closure();
    let c = match prev {
        None => jc,
        Some(p) => intersect_ideals(p, &jc)?,
    };
    Ideal::new(c.ring(), c.canonical_generators())
}

/// Outcome of [`certify_arc_closed`]. `chain` holds `C_0, ..., C_last`.
#[derive(Clone, Debug)]
pub enum Certificate {
    /// `C_level = a`, hence `a ⊆ a^{ac} ⊆ C_level = a`.
    Certified { level: usize, chain: Vec<Ideal> },
    /// No level up to `max_level` closed the chain; this proves nothing.
    NotCertified { max_level: usize, chain: Vec<Ideal> },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified { .. })
    }

    pub fn level(&self) -> Option<usize> {
        match self {
            Certificate::Certified { level, .. } => Some(*level),
            Certificate::NotCertified { .. } => None,
        }
    }

    pub fn chain(&self) -> &[Ideal] {
        match self {
            Certificate::Certified { chain, .. } | Certificate::NotCertified { chain, .. } => chain,
        }
    }
}

/// Searches for the least `ℓ ≤ max_level` with `C_ℓ = a + I`.
///
/// Only `m`-primary ideals can be certified at a finite level; for other
/// ideals the chain keeps shrinking and the answer is `NotCertified`.
pub fn certify_arc_closed(
    algebra: &LocalAlgebra,
    a: &Ideal,
    max_level: usize,
) -> Result<Certificate> {
    let target = algebra.fold(a)?;
    let mut chain: Vec<Ideal> = Vec::new();
    for level in 0..=max_level {
        let c = next_link(algebra, a, level, chain.last())?;
        let closed = c.contains_ideal(&target)? && target.contains_ideal(&c)?;
        chain.push(c);
        if closed {
            return Ok(Certificate::Certified { level, chain });
        }
    }
    Ok(Certificate::NotCertified { max_level, chain })
}

/// Whether `f ∈ a^{jsc_ℓ}`: every `D_i(f)` lies in the radical of the fiber
/// ideal of `a + I + m^{ℓ+1}`.
pub fn jsc_membership(
    algebra: &LocalAlgebra,
    a: &Ideal,
    f: &Polynomial,
    level: usize,
) -> Result<bool> {
    let ideal = algebra.fold(a)?;
    if !same_ring(f.ring(), algebra.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = algebra.ring();
    let primary = ideal.sum(&Ideal::maximal_power(ring, level as u32 + 1))?;
    let jr = JetRing::new(ring, level)?;
    let fiber = fiber_ideal_in(&jr, &primary)?;
    let gb = fiber.groebner_basis(MonomialOrder::DegRevLex);
    for d in jr.derivations(f)? {
        let r = gb.normal_form(&d)?;
        if !r.is_zero() && !radical_member(&r, &fiber)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use alloc::string::{String, ToString};
    use alloc::vec;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(FieldSpec::Rationals, vars.iter().copied()).unwrap()
    }

    fn shown(v: &[Polynomial]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn closure_of_double_point_at_level_one() {
        let r = ring(&["x"]);
        let p = LocalAlgebra::affine(&r);
        let rep = jet_closure(&p, &Ideal::parse(&r, &["x^2"]).unwrap(), 1).unwrap();
        assert_eq!(shown(&rep.generators), vec!["x^2"]);
        assert_eq!((rep.dim_quotient, rep.dim_closure), (2, 0));
    }

    #[test]
    fn level_zero_gives_maximal_ideal() {
        let r = ring(&["x", "y"]);
        let p = LocalAlgebra::affine(&r);
        for a in [vec!["x^2", "y^3"], vec!["x*y"], vec![]] {
            let rep = jet_closure(&p, &Ideal::parse(&r, &a).unwrap(), 0).unwrap();
            assert_eq!(shown(&rep.generators), vec!["x", "y"]);
        }
    }

    #[test]
    fn closure_adds_mixed_term() {
        let r = ring(&["x", "y"]);
        let p = LocalAlgebra::affine(&r);
        let rep = jet_closure(&p, &Ideal::parse(&r, &["x^2", "y^2"]).unwrap(), 1).unwrap();
        assert_eq!(shown(&rep.generators), vec!["x^2", "x*y", "y^2"]);
        // xy already lies in a + m^2, so nothing new is found on R/a'
        assert!(rep.kernel.is_empty());
        let rep = jet_closure(&p, &Ideal::parse(&r, &["x^2", "y^2"]).unwrap(), 2).unwrap();
        assert_eq!(shown(&rep.generators), vec!["x^2", "y^2"]);
        assert_eq!((rep.dim_quotient, rep.dim_closure), (4, 0));
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let r = ring(&["x"]);
        let p = LocalAlgebra::affine(&r);
        let a = Ideal::parse(&r, &["1 + x"]).unwrap();
        assert_eq!(jet_closure(&p, &a, 1).unwrap_err(), Error::NotProper);
        assert_eq!(LocalAlgebra::new(a).unwrap_err(), Error::ModulusNotLocal);
    }

    #[test]
    fn chains() {
        let r = ring(&["x"]);
        let p = LocalAlgebra::affine(&r);
        let chain = cumulative_closure_chain(&p, &Ideal::parse(&r, &["x^2"]).unwrap(), 2).unwrap();
        let gens: Vec<_> = chain.iter().map(|c| shown(c.generators())).collect();
        assert_eq!(gens, vec![vec!["x"], vec!["x^2"], vec!["x^2"]]);

        let r = ring(&["x", "y"]);
        let p = LocalAlgebra::affine(&r);
        let chain = cumulative_closure_chain(&p, &Ideal::parse(&r, &["x"]).unwrap(), 2).unwrap();
        let gens: Vec<_> = chain.iter().map(|c| shown(c.generators())).collect();
        assert_eq!(
            gens,
            vec![vec!["x", "y"], vec!["y^2", "x"], vec!["y^3", "x"]]
        );
        let m = cumulative_closure_chain(&p, &Ideal::maximal(&r), 3).unwrap();
        assert!(m.iter().all(|c| c.same_ideal(&Ideal::maximal(&r)).unwrap()));
    }

    #[test]
    fn certificates() {
        let r = ring(&["x"]);
        let p = LocalAlgebra::affine(&r);
        let c = certify_arc_closed(&p, &Ideal::parse(&r, &["x^2"]).unwrap(), 4).unwrap();
        assert_eq!(c.level(), Some(1));

        let r = ring(&["x", "y"]);
        let p = LocalAlgebra::affine(&r);
        let c = certify_arc_closed(&p, &Ideal::parse(&r, &["x^2", "y^2"]).unwrap(), 4).unwrap();
        assert_eq!(c.level(), Some(2));
        let c = certify_arc_closed(&p, &Ideal::parse(&r, &["x"]).unwrap(), 3).unwrap();
        assert!(!c.is_certified());
        assert_eq!(c.chain().len(), 4);
    }

    #[test]
    fn jet_support_membership() {
        let r = ring(&["x"]);
        let p = LocalAlgebra::new(Ideal::parse(&r, &["x^2"]).unwrap()).unwrap();
        let x = crate::parse_polynomial("x", &r).unwrap();
        assert!(!jsc_membership(&p, &Ideal::zero(&r), &x, 1).unwrap());

        let r = ring(&["x", "y"]);
        let p = LocalAlgebra::affine(&r);
        let a = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let xy = crate::parse_polynomial("x*y", &r).unwrap();
        assert!(jsc_membership(&p, &a, &xy, 2).unwrap());
        let x2 = crate::parse_polynomial("x^2", &r).unwrap();
        assert!((0..3).all(|l| jsc_membership(&p, &a, &x2, l).unwrap()));
    }
}
