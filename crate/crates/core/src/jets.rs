//! Hasse–Schmidt jet calculus over a polynomial ring.
//!
//! The level-`ℓ` jet ring of `k[x_1..x_n]` has variables `x_j@i` for
//! `0 ≤ i ≤ ℓ`, ordered `x_1@0, ..., x_n@0, x_1@1, ...`, so the jet ring of
//! a lower level is a prefix of this one. `D_i(f)` is the coefficient of
//! `t^i` after substituting `x_j ↦ Σ_i x_j@i t^i` and truncating at
//! `t^{ℓ+1}`. This is the divided-power convention: it satisfies
//! `D_m(fg) = Σ_{i+j=m} D_i(f) D_j(g)` in every characteristic.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{same_ring, MonomialOrder, Polynomial, RingContext};

#[derive(Clone, Debug)]
pub struct JetRing {
    base: Arc<RingContext>,
    level: usize,
    ring: Arc<RingContext>,
}

impl JetRing {
    pub fn new(base: &Arc<RingContext>, level: usize) -> Result<Self> {
        if let Some(v) = base.variables().iter().find(|v| v.contains('@')) {
            return Err(Error::InvalidVariable(v.clone()));
        }
        let names: Vec<String> = (0..=level)
            .flat_map(|i| base.variables().iter().map(move |v| format!("{v}@{i}")))
            .collect();
        let ring = RingContext::new(base.field(), names)?;
        Ok(JetRing {
            base: base.clone(),
            level,
            ring,
        })
    }

    pub fn base(&self) -> &Arc<RingContext> {
        &self.base
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// The polynomial ring `R_ℓ` of jet variables.
    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    /// Position of `x_var@order` in the jet ring.
    pub fn index(&self, var: usize, order: usize) -> usize {
        order * self.base.nvars() + var
    }

    pub fn variable(&self, var: usize, order: usize) -> Polynomial {
        Polynomial::variable(&self.ring, self.index(var, order))
    }

    /// Indices of `x_1@0, ..., x_n@0`, which generate `m R_ℓ`.
    pub fn closed_point_variables(&self) -> Vec<usize> {
        (0..self.base.nvars()).collect()
    }

    /// Inclusion `R_ℓ' ⊆ R_ℓ` for a lower level `ℓ'`.
    pub fn include(&self, lower: &JetRing, p: &Polynomial) -> Result<Polynomial> {
        if lower.level > self.level
            || !same_ring(lower.base(), &self.base)
            || !same_ring(p.ring(), &lower.ring)
        {
            return Err(Error::RingMismatch);
        }
        let map: Vec<usize> = (0..lower.ring.nvars()).collect();
        p.rename_into(&self.ring, &map)
    }

    /// `D_0(f), ..., D_ℓ(f)`.
    pub fn derivations(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        if !same_ring(f.ring(), &self.base) {
            return Err(Error::RingMismatch);
        }
        let len = self.level + 1;
        let n = self.base.nvars();
        let zero = Polynomial::zero(&self.ring);
        let mut one = alloc::vec![zero.clone(); len];
        one[0] = Polynomial::one(&self.ring);
        // powers[j][e] = (Σ_i x_j@i t^i)^e truncated
        let mut powers: Vec<Vec<Vec<Polynomial>>> = (0..n)
            .map(|j| alloc::vec![one.clone(), (0..len).map(|i| self.variable(j, i)).collect()])
            .collect();
        let mut out = alloc::vec![zero; len];
        for (m, c) in f.terms() {
            let mut acc: Option<Vec<Polynomial>> = None;
            for (j, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = series_mul(powers[j].last().unwrap(), &powers[j][1]);
                    powers[j].push(next);
                }
                let pj = &powers[j][e as usize];
                acc = Some(match acc {
                    None => pj.clone(),
                    Some(a) => series_mul(&a, pj),
                });
            }
            let series = acc.unwrap_or_else(|| one.clone());
            for (o, s) in out.iter_mut().zip(series) {
                if !s.is_zero() {
                    *o = &*o + &s.scale(c);
                }
            }
        }
        Ok(out)
    }
}

fn series_mul(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let len = a.len();
    let ring = a[0].ring().clone();
    (0..len)
        .map(|k| {
            let mut acc = Polynomial::zero(&ring);
            for i in 0..=k {
                if !a[i].is_zero() && !b[k - i].is_zero() {
                    acc = &acc + &(&a[i] * &b[k - i]);
                }
            }
            acc
        })
        .collect()
}

/// `[D_0 f, ..., D_ℓ f]` in the level-`ℓ` jet ring of `f`'s ring.
pub fn hs_derivations(f: &Polynomial, level: usize) -> Result<Vec<Polynomial>> {
    JetRing::new(f.ring(), level)?.derivations(f)
}

/// The jet ideal `I_ℓ`, generated by `D_i(g)` for the given generators `g`
/// of `I` and `0 ≤ i ≤ ℓ`. Generators are listed `g`-major.
#[derive(Clone, Debug)]
pub struct JetIdeal {
    jet_ring: JetRing,
    source: Ideal,
    generators: Vec<Polynomial>,
}

impl JetIdeal {
    pub fn jet_ring(&self) -> &JetRing {
        &self.jet_ring
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.jet_ring.ring(), self.generators.clone()).unwrap()
    }
}

pub fn jet_ideal(ideal: &Ideal, level: usize) -> Result<JetIdeal> {
    let jr = JetRing::new(ideal.ring(), level)?;
    jet_ideal_in(&jr, ideal)
}

pub fn jet_ideal_in(jr: &JetRing, ideal: &Ideal) -> Result<JetIdeal> {
    let mut generators = Vec::with_capacity(ideal.generators().len() * (jr.level() + 1));
    for g in ideal.generators() {
        generators.extend(jr.derivations(g)?);
    }
    Ok(JetIdeal {
        jet_ring: jr.clone(),
        source: ideal.clone(),
        generators,
    })
}

/// `I_ℓ + m R_ℓ`, cutting out the jets based at the origin. The jet
/// generators are listed with `x@0` already set to zero, which does not
/// change the ideal.
pub fn fiber_ideal(ideal: &Ideal, level: usize) -> Result<Ideal> {
    let jr = JetRing::new(ideal.ring(), level)?;
    fiber_ideal_in(&jr, ideal)
}

pub fn fiber_ideal_in(jr: &JetRing, ideal: &Ideal) -> Result<Ideal> {
    let point = jr.closed_point_variables();
    let mut gens: Vec<Polynomial> = point
        .iter()
        .map(|&v| Polynomial::variable(jr.ring(), v))
        .collect();
    for g in ideal.generators() {
        for d in jr.derivations(g)? {
            let d = d.kill_variables(&point);
            if !d.is_zero() {
                gens.push(d);
            }
        }
    }
    Ideal::new(jr.ring(), gens)
}

/// The universal jet `λ_ℓ(f)`: normal forms of `D_i(f)` modulo the fiber
/// ideal of `I`, for `i = 0..=ℓ`.
pub fn universal_jet_image(f: &Polynomial, ideal: &Ideal, level: usize) -> Result<Vec<Polynomial>> {
    if !same_ring(f.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    let jr = JetRing::new(ideal.ring(), level)?;
    let fiber = fiber_ideal_in(&jr, ideal)?;
    let gb = fiber.groebner_basis(MonomialOrder::DegRevLex);
    jr.derivations(f)?
        .iter()
        .map(|d| gb.normal_form(d))
        .collect()
}
