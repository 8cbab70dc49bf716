//! Jet closures of submodules of finitely presented modules over an
//! Artinian germ `B = S/I`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{coordinate_columns, LocalAlgebra};
use crate::error::{Error, Result};
use crate::groebner::{FreeModuleElement, Ideal, SubmodulePresentation};
use crate::jets::{fiber_ideal_in, JetRing};
use crate::linalg::nullspace_of_columns;
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, RingContext};

/// `M = B^r / relations` together with a submodule `N ⊆ M` given by
/// elements of `S^r`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    algebra: LocalAlgebra,
    relations: SubmodulePresentation,
    submodule: Vec<FreeModuleElement>,
}

impl ModulePresentation {
    pub fn new(
        algebra: LocalAlgebra,
        relations: SubmodulePresentation,
        submodule: Vec<FreeModuleElement>,
    ) -> Result<Self> {
        if !same_ring(relations.ring(), algebra.ring()) {
            return Err(Error::RingMismatch);
        }
        for v in &submodule {
            if v.rank() != relations.rank() {
                return Err(Error::RankMismatch {
                    expected: relations.rank(),
                    found: v.rank(),
                });
            }
            if !same_ring(v.ring(), algebra.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ModulePresentation {
            algebra,
            relations,
            submodule,
        })
    }

    /// The free module `B^r` with `N = 0`.
    pub fn free(algebra: LocalAlgebra, rank: usize) -> Self {
        let relations = SubmodulePresentation::new(algebra.ring(), rank, Vec::new()).unwrap();
        ModulePresentation {
            algebra,
            relations,
            submodule: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &LocalAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        self.algebra.ring()
    }

    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn relations(&self) -> &SubmodulePresentation {
        &self.relations
    }

    pub fn submodule(&self) -> &[FreeModuleElement] {
        &self.submodule
    }

    pub fn with_submodule(&self, submodule: Vec<FreeModuleElement>) -> Result<Self> {
        ModulePresentation::new(self.algebra.clone(), self.relations.clone(), submodule)
    }

    fn modulus_multiples(&self) -> Vec<FreeModuleElement> {
        let ring = self.ring();
        let mut out = Vec::new();
        for p in 0..self.rank() {
            for g in self.algebra.modulus().generators() {
                out.push(FreeModuleElement::basis(ring, self.rank(), p, g.clone()));
            }
        }
        out
    }

    /// The preimage of `N` in `S^r`: relations, `N` and `I·S^r`.
    pub fn submodule_preimage(&self) -> SubmodulePresentation {
        self.relations
            .with_generators(
                self.submodule
                    .iter()
                    .cloned()
                    .chain(self.modulus_multiples()),
            )
            .unwrap()
    }

    /// `dim_k M`.
    pub fn dimension(&self) -> Result<usize> {
        self.algebra.length()?;
        let all = self.relations.with_generators(self.modulus_multiples())?;
        Ok(all
            .groebner_basis(MonomialOrder::DegRevLex)
            .standard_terms()?
            .len())
    }

    /// The same module viewed over `S/I0` for an ideal `I0 ⊆ I`, by adding
    /// `I·S^r` to the relations.
    pub fn restrict_scalars(&self, smaller: LocalAlgebra) -> Result<Self> {
        if !same_ring(smaller.ring(), self.ring()) {
            return Err(Error::RingMismatch);
        }
        if !self.algebra.modulus().contains_ideal(smaller.modulus())? {
            return Err(Error::NotDivisible);
        }
        let relations = self.relations.with_generators(self.modulus_multiples())?;
        ModulePresentation::new(smaller, relations, self.submodule.clone())
    }
}

/// A `B`-linear map `S^r → S^{r'}` given by an `r' × r` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    ring: Arc<RingContext>,
    rows: Vec<Vec<Polynomial>>,
    source_rank: usize,
}

impl ModuleMap {
    pub fn new(
        ring: &Arc<RingContext>,
        source_rank: usize,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        for row in &rows {
            if row.len() != source_rank {
                return Err(Error::RankMismatch {
                    expected: source_rank,
                    found: row.len(),
                });
            }
            if row.iter().any(|f| !same_ring(f.ring(), ring)) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ModuleMap {
            ring: ring.clone(),
            rows,
            source_rank,
        })
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    pub fn apply(&self, v: &FreeModuleElement) -> Result<FreeModuleElement> {
        if v.rank() != self.source_rank {
            return Err(Error::RankMismatch {
                expected: self.source_rank,
                found: v.rank(),
            });
        }
        if !same_ring(v.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let components = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v.components())
                    .fold(Polynomial::zero(&self.ring), |acc, (a, b)| &acc + &(a * b))
            })
            .collect();
        FreeModuleElement::new(&self.ring, components)
    }

    /// The target `S^{r'} / (φ(relations) + extra)` with submodule `φ(N)`,
    /// so that `φ` induces a map `M → M'`.
    pub fn pushforward(
        &self,
        source: &ModulePresentation,
        extra: Vec<FreeModuleElement>,
    ) -> Result<ModulePresentation> {
        if source.rank() != self.source_rank {
            return Err(Error::RankMismatch {
                expected: self.source_rank,
                found: source.rank(),
            });
        }
        let mut rels = source
            .relations()
            .generators()
            .iter()
            .map(|v| self.apply(v))
            .collect::<Result<Vec<_>>>()?;
        rels.extend(extra);
        let relations = SubmodulePresentation::new(&self.ring, self.target_rank(), rels)?;
        let submodule = source
            .submodule()
            .iter()
            .map(|v| self.apply(v))
            .collect::<Result<Vec<_>>>()?;
        ModulePresentation::new(source.algebra().clone(), relations, submodule)
    }
}

/// `(N)^{jc_ℓ}_M` as a submodule of `M`.
#[derive(Clone, Debug)]
pub struct ModuleClosure {
    pub level: usize,
    /// `k`-basis of `M/N` as `(position, monomial)` pairs.
    pub basis: Vec<(usize, Monomial)>,
    /// Basis of the closure's image in `M/N`.
    pub kernel: Vec<FreeModuleElement>,
    /// Preimage in `S^r` of the closure.
    pub closure: SubmodulePresentation,
}

impl ModuleClosure {
    pub fn dim_quotient(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_closure(&self) -> usize {
        self.kernel.len()
    }

    pub fn contains(&self, v: &FreeModuleElement) -> Result<bool> {
        self.closure.contains(v)
    }

    /// For a module of rank one, the closure as an ideal of `S`.
    pub fn to_ideal(&self) -> Result<Ideal> {
        if self.closure.rank() != 1 {
            return Err(Error::RankMismatch {
                expected: 1,
                found: self.closure.rank(),
            });
        }
        let gens = self
            .closure
            .generators()
            .iter()
            .map(|v| v.components()[0].clone())
            .collect();
        Ideal::new(self.closure.ring(), gens)
    }
}

/// Kernel of `1_{M/N} ⊗ λ_ℓ : M/N → M/N ⊗_B C[t]/t^{ℓ+1}`, where `C` is
/// the fiber ring of `B` at level `ℓ`.
pub fn module_jet_closure(mp: &ModulePresentation, level: usize) -> Result<ModuleClosure> {
    mp.algebra().length()?;
    let ring = mp.ring();
    let field = ring.field();
    let rank = mp.rank();
    let width = level + 1;
    let preimage = mp.submodule_preimage();
    let basis = preimage
        .groebner_basis(MonomialOrder::DegRevLex)
        .standard_terms()?;

    let jr = JetRing::new(ring, level)?;
    let jring = jr.ring();
    let fiber = fiber_ideal_in(&jr, mp.algebra().modulus())?;
    let fgb = fiber.groebner_basis(MonomialOrder::DegRevLex);
    let slot = |p: usize, s: usize| p * width + s;

    let mut gens: Vec<FreeModuleElement> = Vec::new();
    for u in mp.relations().generators().iter().chain(mp.submodule()) {
        let jets = u
            .components()
            .iter()
            .map(|c| {
                jr.derivations(c)?
                    .iter()
                    .map(|d| fgb.normal_form(d))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for q in 0..width {
            let mut comps = alloc::vec![Polynomial::zero(jring); rank * width];
            for (p, d) in jets.iter().enumerate() {
                for s in q..width {
                    comps[slot(p, s)] = d[s - q].clone();
                }
            }
            let v = FreeModuleElement::new(jring, comps)?;
            if !v.is_zero() {
                gens.push(v);
            }
        }
    }
    for g in fgb.elements() {
        for i in 0..rank * width {
            gens.push(FreeModuleElement::basis(jring, rank * width, i, g.clone()));
        }
    }
    let target = SubmodulePresentation::new(jring, rank * width, gens)?;
    let tgb = target.groebner_basis(MonomialOrder::DegRevLex);

    let mut images: Vec<Vec<Polynomial>> = Vec::with_capacity(basis.len());
    for (p, m) in &basis {
        let ds = jr.derivations(&Polynomial::from_monomial(ring, m.clone()))?;
        let mut comps = alloc::vec![Polynomial::zero(jring); rank * width];
        for (s, d) in ds.into_iter().enumerate() {
            comps[slot(*p, s)] = d;
        }
        let nf = tgb.normal_form(&FreeModuleElement::new(jring, comps)?)?;
        images.push(nf.components().to_vec());
    }
    let kernel: Vec<FreeModuleElement> =
        nullspace_of_columns(field, &coordinate_columns(field, &images))
            .into_iter()
            .map(|coeffs| {
                let mut parts: Vec<Vec<(Monomial, crate::Scalar)>> = alloc::vec![Vec::new(); rank];
                for ((p, m), c) in basis.iter().zip(coeffs) {
                    if !c.is_zero() {
                        parts[*p].push((m.clone(), c));
                    }
                }
                let comps = parts
                    .into_iter()
                    .map(|t| Polynomial::from_unsorted(ring, t))
                    .collect();
                FreeModuleElement::new(ring, comps).unwrap()
            })
            .collect();
    let closure = preimage.with_generators(kernel.iter().cloned())?;
    Ok(ModuleClosure {
        level,
        basis,
        kernel,
        closure,
    })
}
