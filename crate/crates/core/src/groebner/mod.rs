//! Ideals, reduced Gröbner bases and the membership machinery built on them.

mod engine;
mod module;
mod ops;

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use spin::Mutex;

pub(crate) use engine::{Engine, Vector};
pub use module::{
    submodule_groebner_basis, FreeModuleElement, ModuleGroebnerBasis, SubmodulePresentation,
};
pub use ops::{
    colon_ideal, eliminate_variables, intersect_ideals, radical_member, standard_monomial_basis,
};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, RingContext};

/// A reduced Gröbner basis, sorted by leading monomial (largest first).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<RingContext>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    sparse: Vec<Vector>,
}

pub(crate) fn to_vector(f: &Polynomial, order: MonomialOrder, pos: usize) -> Vector {
    let mut v: Vector = f
        .terms()
        .iter()
        .map(|(m, c)| (pos, m.clone(), c.clone()))
        .collect();
    if order != MonomialOrder::DegRevLex {
        v.sort_by(|a, b| order.cmp(&b.1, &a.1));
    }
    v
}

pub(crate) fn from_vector(ring: &Arc<RingContext>, v: &Vector, order: MonomialOrder) -> Polynomial {
    let terms = v.iter().map(|(_, m, c)| (m.clone(), c.clone())).collect();
    if order == MonomialOrder::DegRevLex {
        Polynomial::from_sorted(ring, terms)
    } else {
        Polynomial::from_unsorted(ring, terms)
    }
}

impl GroebnerBasis {
    fn compute(ring: &Arc<RingContext>, gens: &[Polynomial], order: MonomialOrder) -> Self {
        let engine = Engine {
            order,
            field: ring.field(),
            module: false,
        };
        let sparse = engine.groebner(gens.iter().map(|g| to_vector(g, order, 0)).collect());
        let elements = sparse.iter().map(|v| from_vector(ring, v, order)).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order,
            elements,
            sparse,
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sparse.iter().map(|v| v[0].1.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.sparse.len() == 1 && self.sparse[0][0].1.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.sparse.is_empty()
    }

    fn engine(&self) -> Engine {
        Engine {
            order: self.order,
            field: self.ring.field(),
            module: false,
        }
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let r = self
            .engine()
            .reduce(to_vector(f, self.order, 0), &self.sparse);
        Ok(from_vector(&self.ring, &r, self.order))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Monomials outside the leading-term ideal, sorted increasingly under
    /// the basis order. Fails if there are infinitely many.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        let mut bounds = Vec::with_capacity(n);
        for j in 0..n {
            let pure = leads
                .iter()
                .filter(|m| {
                    m.exponents()
                        .iter()
                        .enumerate()
                        .all(|(i, &e)| i == j || e == 0)
                })
                .map(|m| m.exponents()[j])
                .min();
            match pure {
                Some(e) => bounds.push(e),
                None => return Err(Error::InfiniteDimensional(self.ring.variables()[j].clone())),
            }
        }
        let mut out = Vec::new();
        let mut exps = alloc::vec![0u32; n];
        if bounds.iter().all(|&b| b > 0) {
            loop {
                let m = Monomial::new(exps.clone());
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push(m);
                }
                // odometer over the box
                let mut k = 0;
                while k < n {
                    exps[k] += 1;
                    if exps[k] < bounds[k] {
                        break;
                    }
                    exps[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(out)
    }
}

/// Reduced Gröbner basis of `ideal` under `order` (cached on the ideal).
pub fn reduced_groebner_basis(ideal: &Ideal, order: MonomialOrder) -> Arc<GroebnerBasis> {
    ideal.groebner_basis(order)
}

/// Remainder of `f` modulo `basis`.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

/// Whether `f` lies in `ideal`.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// An ideal given by generators, with lazily computed Gröbner bases.
pub struct Ideal {
    ring: Arc<RingContext>,
    generators: Vec<Polynomial>,
    cache: Mutex<Vec<Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("generators", &self.generators)
            .finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<RingContext>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            cache: Mutex::new(Vec::new()),
        })
    }

    /// Parses each string with [`crate::parse_polynomial`].
    pub fn parse(ring: &Arc<RingContext>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| crate::poly::parse_polynomial(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            cache: Mutex::new(Vec::new()),
        }
    }

    pub fn unit(ring: &Arc<RingContext>) -> Self {
        Ideal::new(ring, alloc::vec![Polynomial::one(ring)]).unwrap()
    }

    /// The ideal of the origin, `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<RingContext>) -> Self {
        let gens = (0..ring.nvars())
            .map(|i| Polynomial::variable(ring, i))
            .collect();
        Ideal::new(ring, gens).unwrap()
    }

    /// `m^d`, generated by all monomials of degree `d`.
    pub fn maximal_power(ring: &Arc<RingContext>, d: u32) -> Self {
        let n = ring.nvars();
        let mut gens = Vec::new();
        let mut exps = alloc::vec![0u32; n];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = exps.len();
            if i + 1 == n {
                exps[i] = left;
                out.push(Monomial::new(exps.clone()));
                exps[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            return if d == 0 {
                Ideal::unit(ring)
            } else {
                Ideal::zero(ring)
            };
        }
        rec(0, d, &mut exps, &mut gens);
        Ideal::new(
            ring,
            gens.into_iter()
                .map(|m| Polynomial::from_monomial(ring, m))
                .collect(),
        )
        .unwrap()
    }

    /// `(x_1^e, ..., x_n^e)`.
    pub fn pure_powers(ring: &Arc<RingContext>, e: u32) -> Self {
        let gens = (0..ring.nvars())
            .map(|i| Polynomial::variable(ring, i).pow(e))
            .collect();
        Ideal::new(ring, gens).unwrap()
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The cached reduced basis for `order`, computed on first use. The
    /// cache lock is held during the computation so concurrent callers see
    /// one result.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Arc<GroebnerBasis> {
        let mut cache = self.cache.lock();
        if let Some(gb) = cache.iter().find(|g| g.order == order) {
            return gb.clone();
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ring, &self.generators, order));
        cache.push(gb.clone());
        gb
    }

    /// Generators of the reduced degrevlex basis: a canonical generating set.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        self.groebner_basis(MonomialOrder::DegRevLex)
            .elements()
            .to_vec()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner_basis(MonomialOrder::DegRevLex).contains(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.groebner_basis(MonomialOrder::DegRevLex).normal_form(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let gb = self.groebner_basis(MonomialOrder::DegRevLex);
        for g in &other.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, via reduced bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.canonical_generators() == other.canonical_generators())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis(MonomialOrder::DegRevLex).is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(|g| g.is_zero())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `dim_k S/I`, when finite.
    pub fn colength(&self) -> Result<usize> {
        Ok(self
            .groebner_basis(MonomialOrder::DegRevLex)
            .standard_monomials()?
            .len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use alloc::string::ToString;
    use alloc::vec;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(FieldSpec::Rationals, vars.iter().copied()).unwrap()
    }

    fn strings(g: &GroebnerBasis) -> Vec<alloc::string::String> {
        g.elements().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn basis_of_monomials() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        assert_eq!(
            strings(&reduced_groebner_basis(&i, MonomialOrder::DegRevLex)),
            vec!["x^2", "x*y"]
        );
    }

    #[test]
    fn basis_lex_one_step() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2 - y", "y - 1"]).unwrap();
        assert_eq!(
            strings(&reduced_groebner_basis(&i, MonomialOrder::Lex)),
            vec!["x^2 - 1", "y - 1"]
        );
        assert!(reduced_groebner_basis(&Ideal::zero(&r), MonomialOrder::Lex).is_zero());
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let g =
            reduced_groebner_basis(&Ideal::parse(&r, &["x^2 - y"]).unwrap(), MonomialOrder::Lex);
        let f = crate::parse_polynomial("x^2 + y", &r).unwrap();
        assert_eq!(normal_form(&f, &g).unwrap().to_string(), "2*y");
        let g2 = reduced_groebner_basis(&Ideal::parse(&r, &["x^2"]).unwrap(), MonomialOrder::Lex);
        let y = crate::parse_polynomial("y", &r).unwrap();
        assert_eq!(normal_form(&y, &g2).unwrap(), y);
        let other = Polynomial::variable(&ring(&["z"]), 0);
        assert_eq!(normal_form(&other, &g2), Err(Error::RingMismatch));
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y"]);
        let p = |s| crate::parse_polynomial(s, &r).unwrap();
        assert!(ideal_member(&p("x*y"), &Ideal::parse(&r, &["x"]).unwrap()).unwrap());
        assert!(!ideal_member(&p("x"), &Ideal::parse(&r, &["x^2", "x*y"]).unwrap()).unwrap());
        // S/(x^2 - y, y^2) is k[x]/(x^4), so x^3 survives and x^4 does not
        let i = Ideal::parse(&r, &["x^2 - y", "y^2"]).unwrap();
        assert!(!ideal_member(&p("x^3"), &i).unwrap());
        assert!(ideal_member(&p("x^4"), &i).unwrap());
        assert!(ideal_member(&p("x^3 - x*y"), &i).unwrap());
    }

    #[test]
    fn standard_monomials_and_colength() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let (basis, n) = standard_monomial_basis(&i, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(n, 3);
        let shown: Vec<_> = basis
            .iter()
            .map(|m| Polynomial::from_monomial(&r, m.clone()).to_string())
            .collect();
        assert_eq!(shown, vec!["1", "y", "x"]);
        assert_eq!(
            Ideal::parse(&r, &["x^2", "y^2"])
                .unwrap()
                .colength()
                .unwrap(),
            4
        );
        assert_eq!(
            Ideal::parse(&r, &["x"]).unwrap().colength(),
            Err(Error::InfiniteDimensional("y".into()))
        );
        assert_eq!(Ideal::unit(&r).colength().unwrap(), 0);
    }

    #[test]
    fn maximal_power_generators() {
        let r = ring(&["x", "y"]);
        let m2 = Ideal::maximal_power(&r, 2);
        let shown: Vec<_> = m2.generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["x^2", "x*y", "y^2"]);
        assert_eq!(m2.colength().unwrap(), 3);
    }
}
