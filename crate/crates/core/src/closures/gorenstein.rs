//! Socles, Matlis embeddings `S/I ↪ S/m_N` and the reduction of an
//! Artinian germ to its Gorenstein quotients.

use alloc::vec::Vec;

use super::{certify_arc_closed, combination, coordinate_columns, Certificate, LocalAlgebra};
use crate::error::{Error, Result};
use crate::groebner::{colon_ideal, Ideal};
use crate::linalg::{nullspace_of_columns, rank};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// `(0 : m)` in an Artinian germ.
#[derive(Clone, Debug)]
pub struct Socle {
    /// Standard monomials of the modulus, increasing in degrevlex.
    pub standard_monomials: Vec<Monomial>,
    /// Basis of the socle, ordered by degree of the leading term.
    pub basis: Vec<Polynomial>,
}

impl Socle {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.basis.len() == 1
    }
}

fn top_degree(f: &Polynomial) -> u32 {
    f.total_degree().unwrap_or(0)
}

pub fn socle_and_gorenstein(algebra: &LocalAlgebra) -> Result<Socle> {
    algebra.length()?;
    let ring = algebra.ring();
    let gb = algebra.modulus().groebner_basis(MonomialOrder::DegRevLex);
    let standard = gb.standard_monomials()?;
    let n = ring.nvars();
    let mut images = Vec::with_capacity(standard.len());
    for b in &standard {
        let row = (0..n)
            .map(|j| {
                gb.normal_form(&Polynomial::from_monomial(
                    ring,
                    b.mul(&Monomial::variable(n, j)),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(row);
    }
    let field = ring.field();
    let mut basis: Vec<Polynomial> =
        nullspace_of_columns(field, &coordinate_columns(field, &images))
            .into_iter()
            .map(|v| combination(ring, &standard, &v).monic(MonomialOrder::DegRevLex))
            .collect();
    basis.sort_by(|a, b| {
        top_degree(a).cmp(&top_degree(b)).then_with(|| {
            let (la, lb) = (
                a.leading_monomial(MonomialOrder::DegRevLex),
                b.leading_monomial(MonomialOrder::DegRevLex),
            );
            MonomialOrder::DegRevLex.cmp(la.unwrap(), lb.unwrap())
        })
    });
    Ok(Socle {
        standard_monomials: standard,
        basis,
    })
}

/// Least `N` with `x_j^N ∈ I` for every variable.
pub fn minimal_power_exponent(algebra: &LocalAlgebra) -> Result<u32> {
    let len = algebra.length()? as u32;
    let ring = algebra.ring();
    let n = ring.nvars();
    let mut best = 1;
    for j in 0..n {
        let e = (1..=len)
            .find(|&e| {
                let p = Polynomial::from_monomial(ring, Monomial::variable(n, j).pow(e));
                algebra.modulus().contains(&p).unwrap_or(false)
            })
            .ok_or(Error::NotArtinian)?;
        best = best.max(e);
    }
    Ok(best)
}

/// Witness `w` with `(m_N : I) = (w) + m_N`, so that `1 ↦ w` embeds
/// `S/I` into `S/m_N`.
#[derive(Clone, Debug)]
pub struct MatlisEmbedding {
    pub power: u32,
    pub witness: Polynomial,
    /// Reduced degrevlex basis of `(m_N : I)`.
    pub colon: Vec<Polynomial>,
    /// Images of the standard monomials of `I` under `1 ↦ w`, reduced
    /// modulo `m_N`.
    pub images: Vec<(Monomial, Polynomial)>,
    /// Rank of `images`; equals `length_source` when the map is injective.
    pub rank: usize,
    pub length_source: usize,
    pub length_target: usize,
    /// `dim_k (m_N : I) / m_N`.
    pub length_colon_quotient: usize,
}

impl MatlisEmbedding {
    pub fn is_verified(&self) -> bool {
        self.rank == self.length_source && self.length_colon_quotient == self.length_source
    }
}

pub fn matlis_embedding(algebra: &LocalAlgebra, power: u32) -> Result<MatlisEmbedding> {
    let ring = algebra.ring();
    let modulus = algebra.modulus();
    let n = ring.nvars();
    let m_n = Ideal::pure_powers(ring, power);
    for (j, g) in m_n.generators().iter().enumerate() {
        if !modulus.contains(g)? {
            return Err(Error::PowersNotContained {
                variable: ring.variables()[j].clone(),
                exponent: power,
            });
        }
    }
    let socle = socle_and_gorenstein(algebra)?;
    if !socle.is_gorenstein() {
        return Err(Error::NotGorenstein(socle.dimension()));
    }
    let colon = Ideal::new(ring, colon_ideal(&m_n, modulus)?.canonical_generators())?;

    let gb_n = m_n.groebner_basis(MonomialOrder::DegRevLex);
    let mut candidates: Vec<Polynomial> = Vec::new();
    for g in colon.generators() {
        let r = gb_n.normal_form(g)?;
        if !r.is_zero() {
            candidates.push(r.monic(MonomialOrder::DegRevLex));
        }
    }
    candidates.sort_by_key(top_degree);
    if candidates.len() > 1 {
        let sum = candidates
            .iter()
            .fold(Polynomial::zero(ring), |acc, c| &acc + c);
        if !sum.is_zero() {
            candidates.push(sum.monic(MonomialOrder::DegRevLex));
        }
    }
    let mut witness = None;
    for w in candidates {
        if m_n.with_generators([w.clone()])?.same_ideal(&colon)? {
            witness = Some(w);
            break;
        }
    }
    let witness = witness.ok_or(Error::NoWitness)?;

    let images = socle
        .standard_monomials
        .iter()
        .map(|b| {
            Ok((
                b.clone(),
                gb_n.normal_form(&witness.mul_term(b, &ring.field().one()))?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let field = ring.field();
    let columns = coordinate_columns(
        field,
        &images
            .iter()
            .map(|(_, p)| alloc::vec![p.clone()])
            .collect::<Vec<_>>(),
    );
    let width = columns.first().map_or(0, |c| c.len());
    let rank = rank(field, &columns, width);
    let length_target = (power as usize).pow(n as u32);
    let length_colon = colon.colength()?;
    Ok(MatlisEmbedding {
        power,
        witness,
        colon: colon.generators().to_vec(),
        images,
        rank,
        length_source: socle.standard_monomials.len(),
        length_target,
        length_colon_quotient: length_target - length_colon,
    })
}

/// One germ in the reduction `A → A/(g_1) → A/(g_1, g_2) → ...`.
#[derive(Clone, Debug)]
pub struct WalkthroughStage {
    /// Reduced degrevlex basis of the modulus of this stage.
    pub modulus: Vec<Polynomial>,
    pub length: usize,
    pub socle: Vec<Polynomial>,
    pub gorenstein: bool,
    /// Socle element divided out to reach the next stage.
    pub removed: Option<Polynomial>,
    /// Certificate for `(0)` in this stage.
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct Walkthrough {
    pub stages: Vec<WalkthroughStage>,
    pub matlis: MatlisEmbedding,
}

impl Walkthrough {
    /// Number of socle reductions performed.
    pub fn steps(&self) -> usize {
        self.stages.len() - 1
    }
}

/// Divides out socle elements of least degree until the quotient is
/// Gorenstein, certifying `(0)` at each stage, then embeds the Gorenstein
/// quotient into `S/m_N` for the least admissible `N`.
pub fn gorenstein_walkthrough(algebra: &LocalAlgebra, max_level: usize) -> Result<Walkthrough> {
    let ring = algebra.ring();
    let mut current =
        LocalAlgebra::new(Ideal::new(ring, algebra.modulus().canonical_generators())?)?;
    let mut stages = Vec::new();
    loop {
        let length = current.length()?;
        let socle = socle_and_gorenstein(&current)?;
        let certificate = certify_arc_closed(&current, &Ideal::zero(ring), max_level)?;
        let gorenstein = socle.is_gorenstein();
        let removed = if gorenstein {
            None
        } else {
            Some(socle.basis[0].clone())
        };
        stages.push(WalkthroughStage {
            modulus: current.modulus().generators().to_vec(),
            length,
            socle: socle.basis,
            gorenstein,
            removed: removed.clone(),
            certificate,
        });
        match removed {
            None => break,
            Some(g) => {
                let next = current.modulus().with_generators([g])?;
                current = LocalAlgebra::new(Ideal::new(ring, next.canonical_generators())?)?;
                let next_length = current.length()?;
                if next_length + 1 != length {
                    return Err(Error::DimensionMismatch {
                        expected: length - 1,
                        found: next_length,
                    });
                }
            }
        }
    }
    let power = minimal_power_exponent(&current)?;
    let matlis = matlis_embedding(&current, power)?;
    Ok(Walkthrough { stages, matlis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::RingContext;
    use alloc::string::{String, ToString};
    use alloc::sync::Arc;
    use alloc::vec;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(FieldSpec::Rationals, vars.iter().copied()).unwrap()
    }

    fn algebra(r: &Arc<RingContext>, gens: &[&str]) -> LocalAlgebra {
        LocalAlgebra::new(Ideal::parse(r, gens).unwrap()).unwrap()
    }

    fn shown(v: &[Polynomial]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn socles() {
        let r = ring(&["x", "y"]);
        let s = socle_and_gorenstein(&algebra(&r, &["x^2", "y^2"])).unwrap();
        assert_eq!(shown(&s.basis), vec!["x*y"]);
        assert!(s.is_gorenstein());
        let s = socle_and_gorenstein(&algebra(&r, &["x^2", "x*y", "y^2"])).unwrap();
        assert_eq!(s.dimension(), 2);
        assert!(!s.is_gorenstein());
        let s = socle_and_gorenstein(&algebra(&r, &["x", "y"])).unwrap();
        assert_eq!(shown(&s.basis), vec!["1"]);
        let s = socle_and_gorenstein(&algebra(&r, &["x^2", "x*y", "y^3"])).unwrap();
        assert_eq!(shown(&s.basis), vec!["x", "y^2"]);
    }

    #[test]
    fn non_artinian_is_rejected() {
        let r = ring(&["x", "y"]);
        assert_eq!(
            socle_and_gorenstein(&algebra(&r, &["x"])).unwrap_err(),
            Error::NotArtinian
        );
        assert_eq!(
            socle_and_gorenstein(&algebra(&r, &["x^2 - x", "y"])).unwrap_err(),
            Error::NotArtinian
        );
    }

    #[test]
    fn matlis_witnesses() {
        let r = ring(&["x"]);
        let e = matlis_embedding(&algebra(&r, &["x^2"]), 3).unwrap();
        assert_eq!(e.witness.to_string(), "x");
        assert_eq!(
            e.images
                .iter()
                .map(|(_, p)| p.to_string())
                .collect::<Vec<_>>(),
            vec!["x", "x^2"]
        );
        assert!(e.is_verified());

        let r = ring(&["x", "y"]);
        let e = matlis_embedding(&algebra(&r, &["x*y", "x^2 - y^2"]), 3).unwrap();
        assert_eq!(e.witness.to_string(), "x^2 + y^2");
        assert_eq!(
            (e.length_source, e.length_colon_quotient, e.rank),
            (4, 4, 4)
        );
        let e = matlis_embedding(&algebra(&r, &["x^2", "y^2"]), 2).unwrap();
        assert_eq!(e.witness.to_string(), "1");
    }

    #[test]
    fn matlis_errors() {
        let r = ring(&["x", "y"]);
        assert!(matches!(
            matlis_embedding(&algebra(&r, &["x*y", "x^2 - y^2"]), 2),
            Err(Error::PowersNotContained { .. })
        ));
        assert_eq!(
            matlis_embedding(&algebra(&r, &["x^2", "x*y", "y^2"]), 2).unwrap_err(),
            Error::NotGorenstein(2)
        );
    }

    #[test]
    fn walkthroughs() {
        let r = ring(&["x", "y"]);
        let w = gorenstein_walkthrough(&algebra(&r, &["x^2", "x*y", "y^3"]), 6).unwrap();
        assert_eq!(w.steps(), 1);
        assert_eq!(w.stages[0].removed.as_ref().unwrap().to_string(), "x");
        assert_eq!(shown(&w.stages[1].modulus), vec!["y^3", "x"]);
        assert_eq!((w.stages[0].length, w.stages[1].length), (4, 3));
        assert!(w.stages.iter().all(|s| s.certificate.is_certified()));
        assert!(w.matlis.is_verified());

        let w = gorenstein_walkthrough(&algebra(&r, &["x^2", "y^2"]), 4).unwrap();
        assert_eq!(w.steps(), 0);
        let w = gorenstein_walkthrough(&algebra(&r, &["x", "y"]), 2).unwrap();
        assert_eq!(w.stages[0].certificate.level(), Some(0));
        assert_eq!(w.matlis.witness.to_string(), "1");
    }
}
