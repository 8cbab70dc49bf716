//! Submodules of free modules `S^r` under a position-over-term order.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use spin::Mutex;

use super::{to_vector, Engine, Vector};
use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, RingContext};

/// An element of the free module `S^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    ring: Arc<RingContext>,
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(ring: &Arc<RingContext>, components: Vec<Polynomial>) -> Result<Self> {
        if components.iter().any(|c| !same_ring(c.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(FreeModuleElement {
            ring: ring.clone(),
            components,
        })
    }

    pub fn zero(ring: &Arc<RingContext>, rank: usize) -> Self {
        FreeModuleElement {
            ring: ring.clone(),
            components: alloc::vec![Polynomial::zero(ring); rank],
        }
    }

    /// `f · e_i`.
    pub fn basis(ring: &Arc<RingContext>, rank: usize, i: usize, f: Polynomial) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = f;
        v
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, f: &Polynomial) -> Self {
        FreeModuleElement {
            ring: self.ring.clone(),
            components: self.components.iter().map(|c| c * f).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if other.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeModuleElement {
            ring: self.ring.clone(),
            components,
        })
    }

    pub(crate) fn to_vector(&self, order: MonomialOrder) -> Vector {
        let mut v: Vector = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            v.extend(to_vector(c, order, i));
        }
        v
    }

    pub(crate) fn from_vector(ring: &Arc<RingContext>, rank: usize, v: &Vector) -> Self {
        let mut parts: Vec<Vec<(Monomial, crate::Scalar)>> = alloc::vec![Vec::new(); rank];
        for (p, m, c) in v {
            parts[*p].push((m.clone(), c.clone()));
        }
        FreeModuleElement {
            ring: ring.clone(),
            components: parts
                .into_iter()
                .map(|t| Polynomial::from_unsorted(ring, t))
                .collect(),
        }
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// A submodule of `S^r` given by generators.
pub struct SubmodulePresentation {
    ring: Arc<RingContext>,
    rank: usize,
    generators: Vec<FreeModuleElement>,
    cache: Mutex<Vec<Arc<ModuleGroebnerBasis>>>,
}

impl Clone for SubmodulePresentation {
    fn clone(&self) -> Self {
        SubmodulePresentation {
            ring: self.ring.clone(),
            rank: self.rank,
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().clone()),
        }
    }
}

impl fmt::Debug for SubmodulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubmodulePresentation")
            .field("rank", &self.rank)
            .field("generators", &self.generators)
            .finish()
    }
}

impl SubmodulePresentation {
    pub fn new(
        ring: &Arc<RingContext>,
        rank: usize,
        generators: Vec<FreeModuleElement>,
    ) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: g.rank(),
                });
            }
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(SubmodulePresentation {
            ring: ring.clone(),
            rank,
            generators,
            cache: Mutex::new(Vec::new()),
        })
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.generators
    }

    pub fn with_generators(
        &self,
        extra: impl IntoIterator<Item = FreeModuleElement>,
    ) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        SubmodulePresentation::new(&self.ring, self.rank, gens)
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<ModuleGroebnerBasis> {
        let mut cache = self.cache.lock();
        if let Some(gb) = cache.iter().find(|g| g.order == order) {
            return gb.clone();
        }
        let engine = Engine {
            order,
            field: self.ring.field(),
            module: true,
        };
        let sparse = engine.groebner(self.generators.iter().map(|g| g.to_vector(order)).collect());
        let elements = sparse
            .iter()
            .map(|v| FreeModuleElement::from_vector(&self.ring, self.rank, v))
            .collect();
        let gb = Arc::new(ModuleGroebnerBasis {
            ring: self.ring.clone(),
            rank: self.rank,
            order,
            elements,
            sparse,
        });
        cache.push(gb.clone());
        gb
    }

    pub fn contains(&self, v: &FreeModuleElement) -> Result<bool> {
        self.groebner_basis(MonomialOrder::DegRevLex).contains(v)
    }
}

/// Reduced Gröbner basis of a submodule under position-over-term.
#[derive(Clone, Debug)]
pub struct ModuleGroebnerBasis {
    ring: Arc<RingContext>,
    rank: usize,
    order: MonomialOrder,
    elements: Vec<FreeModuleElement>,
    sparse: Vec<Vector>,
}

impl ModuleGroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[FreeModuleElement] {
        &self.elements
    }

    fn check(&self, v: &FreeModuleElement) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: v.rank(),
            });
        }
        if !same_ring(v.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub(crate) fn reduce_vector(&self, v: Vector) -> Vector {
        let engine = Engine {
            order: self.order,
            field: self.ring.field(),
            module: true,
        };
        engine.reduce(v, &self.sparse)
    }

    pub fn normal_form(&self, v: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.check(v)?;
        let r = self.reduce_vector(v.to_vector(self.order));
        Ok(FreeModuleElement::from_vector(&self.ring, self.rank, &r))
    }

    pub fn contains(&self, v: &FreeModuleElement) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// `(position, monomial)` pairs outside the leading-term module: a
    /// `k`-basis of `S^r / U` when finite. Sorted by position, then
    /// increasingly under the order.
    pub fn standard_terms(&self) -> Result<Vec<(usize, Monomial)>> {
        let mut out = Vec::new();
        for p in 0..self.rank {
            let leads: Vec<Polynomial> = self
                .sparse
                .iter()
                .filter(|v| v[0].0 == p)
                .map(|v| Polynomial::from_monomial(&self.ring, v[0].1.clone()))
                .collect();
            let monomial_ideal = super::Ideal::new(&self.ring, leads)?;
            let basis = monomial_ideal
                .groebner_basis(self.order)
                .standard_monomials()?;
            out.extend(basis.into_iter().map(|m| (p, m)));
        }
        Ok(out)
    }
}

/// Module Gröbner basis of `s` under position-over-term refining `order`.
pub fn submodule_groebner_basis(
    s: &SubmodulePresentation,
    order: MonomialOrder,
) -> Arc<ModuleGroebnerBasis> {
    s.groebner_basis(order)
}
