//! Monomials, polynomial rings and exact multivariate polynomials.

mod order;
mod parse;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub(crate) use order::deglex;
pub use order::{compare_monomials, MonomialOrder};
pub use parse::parse_polynomial;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A polynomial ring `k[x_1, ..., x_n]`: a coefficient field plus an ordered
/// list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: FieldSpec,
    vars: Vec<String>,
    /// Variable indices in printing order: jet variables `x@i` are grouped
    /// by stem, then sorted by level.
    display: Vec<usize>,
}

/// Variable names are identifiers, optionally followed by `@level` for jet
/// variables.
fn valid_name(name: &str) -> bool {
    let (stem, level) = match name.split_once('@') {
        Some((s, l)) => (s, Some(l)),
        None => (name, None),
    };
    let mut chars = stem.chars();
    let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
    let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    let level_ok = level.is_none_or(|l| !l.is_empty() && l.bytes().all(|b| b.is_ascii_digit()));
    head_ok && tail_ok && level_ok
}

impl RingContext {
    pub fn new<S: Into<String>>(
        field: FieldSpec,
        vars: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::InvalidVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        let stem_of = |v: &String| v.split_once('@').map_or(v.as_str(), |(s, _)| s).to_string();
        let level_of = |v: &String| {
            v.split_once('@')
                .map_or(0u64, |(_, l)| l.parse().unwrap_or(u64::MAX))
        };
        let stems: Vec<String> = vars.iter().map(stem_of).collect();
        let mut display: Vec<usize> = (0..vars.len()).collect();
        display.sort_by_key(|&i| {
            (
                stems.iter().position(|s| *s == stems[i]),
                level_of(&vars[i]),
            )
        });
        Ok(Arc::new(RingContext {
            field,
            vars,
            display,
        }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// A variable name based on `stem` that does not clash with this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (1..)
            .map(|i| alloc::format!("{stem}_{i}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }

    /// Same field, variables `front ++ self.vars ++ back`.
    pub fn extended(&self, front: &[String], back: &[String]) -> Result<Arc<Self>> {
        let vars = front.iter().chain(&self.vars).chain(back).cloned();
        RingContext::new(self.field, vars)
    }
}

pub(crate) fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// An exponent vector with its cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * e).collect(),
            degree: self.degree * e,
        }
    }
}

/// A polynomial in canonical form: terms sorted strictly decreasing in
/// degrevlex, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<RingContext>,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

const STORAGE: MonomialOrder = MonomialOrder::DegRevLex;

impl Polynomial {
    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingContext>, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<RingContext>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Arc<RingContext>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn variable(ring: &Arc<RingContext>, index: usize) -> Self {
        Self::term(
            ring,
            Monomial::variable(ring.nvars(), index),
            ring.field().one(),
        )
    }

    pub fn term(ring: &Arc<RingContext>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(
            m.nvars(),
            ring.nvars(),
            "monomial length does not match ring"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_monomial(ring: &Arc<RingContext>, m: Monomial) -> Self {
        Self::term(ring, m, ring.field().one())
    }

    /// Builds the canonical form of an arbitrary list of terms.
    pub fn from_terms(
        ring: &Arc<RingContext>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let field = ring.field();
        let mut v: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            if !field.owns(&c) {
                return Err(Error::RingMismatch);
            }
            v.push((m, c));
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: collect_terms(v, field, STORAGE),
        })
    }

    /// Trusted constructor for terms already sorted in storage order.
    pub(crate) fn from_sorted(ring: &Arc<RingContext>, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| STORAGE.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms in any order; combined and sorted here.
    pub(crate) fn from_unsorted(ring: &Arc<RingContext>, terms: Vec<(Monomial, Scalar)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: collect_terms(terms, ring.field(), STORAGE),
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    /// Terms, strictly decreasing in degrevlex.
    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Scalar {
        // the constant monomial is the smallest in degrevlex
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .binary_search_by(|(t, _)| STORAGE.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field().zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Smallest degree of a term; `None` for zero.
    pub fn order_of_vanishing(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        if order == STORAGE {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let field = self.field();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.terms, &other.terms, |c| c.clone(), field, STORAGE),
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let field = self.field();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.terms, &other.terms, |c| field.neg(c), field, STORAGE),
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let field = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut prod = Vec::with_capacity(self.num_terms() * other.num_terms());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                prod.push((m.mul(n), field.mul(c, d)));
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: collect_terms(prod, field, STORAGE),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let field = self.field();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), field.mul(c, d)))
                .collect(),
        }
    }

    /// `c * m * self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let field = self.field();
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), field.mul(c, d)))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c).unwrap();
                self.scale(&inv)
            }
        }
    }

    /// Moves the polynomial into `ring`, sending variable `i` to variable
    /// `map[i]`. The coefficient fields must agree.
    pub fn rename_into(&self, ring: &Arc<RingContext>, map: &[usize]) -> Result<Polynomial> {
        if ring.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        if map.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                found: map.len(),
            });
        }
        let n = ring.nvars();
        if map.iter().any(|&j| j >= n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: map.iter().max().unwrap() + 1,
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_unsorted(ring, terms))
    }

    /// Sets the listed variables to zero.
    pub fn kill_variables(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exponents()[v] == 0))
                .cloned()
                .collect(),
        }
    }

    /// Ring homomorphism `x_i ↦ images[i]` into the ring of the images.
    pub fn substitute(
        &self,
        target: &Arc<RingContext>,
        images: &[Polynomial],
    ) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) || target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / g`; fails if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check(g)?;
        let field = self.field();
        let (lm, lc) = g.terms.first().ok_or(Error::NotDivisible)?;
        let inv = field.inv(lc).unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return Err(Error::NotDivisible);
            }
            let qm = m.div(lm);
            let qc = field.mul(&c, &inv);
            rem = &rem - &g.mul_term(&qm, &qc);
            quot.push((qm, qc));
        }
        Ok(Polynomial::from_sorted(&self.ring, quot))
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..n)
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exponents()[i] > 0))
            .collect()
    }
}

/// Sorts decreasing under `order`, merges equal monomials and drops zeros.
pub(crate) fn collect_terms(
    mut v: Vec<(Monomial, Scalar)>,
    field: FieldSpec,
    order: MonomialOrder,
) -> Vec<(Monomial, Scalar)> {
    v.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(v.len());
    for (m, c) in v {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if lc.is_zero() {
            out.pop();
        }
    }
    out
}

/// `a + map(b)` for two term lists sorted decreasing under `order`.
pub(crate) fn merge_add(
    a: &[(Monomial, Scalar)],
    b: &[(Monomial, Scalar)],
    map: impl Fn(&Scalar) -> Scalar,
    field: FieldSpec,
    order: MonomialOrder,
) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), map(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &map(&b[j].1));
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), map(c))));
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on a ring mismatch; use [`Polynomial::try_add`] to recover.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }
}

/// Checked product `f * g`.
pub fn multiply_polynomials(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.try_mul(g)
}

pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    ring: &RingContext,
    m: &Monomial,
) -> fmt::Result {
    let mut first = true;
    for &i in &ring.display {
        let e = m.exponents()[i];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Wrapper that prints a monomial with its ring's variable names.
pub struct MonomialDisplay<'a>(pub &'a RingContext, pub &'a Monomial);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self.0, self.1)
    }
}

impl fmt::Display for Polynomial {
    /// Session-grammar text, terms in decreasing graded-lex order with
    /// variables taken in printing order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let display = &self.ring.display;
        let key = |m: &Monomial| Monomial::new(display.iter().map(|&i| m.exponents()[i]).collect());
        let mut sorted: Vec<(Monomial, &Scalar, &Monomial)> =
            self.terms.iter().map(|(m, c)| (key(m), c, m)).collect();
        sorted.sort_by(|a, b| deglex(&b.0, &a.0));
        for (k, (_, c, m)) in sorted.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn qring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(FieldSpec::Rationals, vars.iter().copied()).unwrap()
    }

    #[test]
    fn ring_names_are_validated() {
        assert_eq!(
            RingContext::new(FieldSpec::Rationals, ["x", "x"]).unwrap_err(),
            Error::DuplicateVariable("x".into())
        );
        assert!(RingContext::new(FieldSpec::Rationals, ["x@3", "y_1"]).is_ok());
        assert!(RingContext::new(FieldSpec::Rationals, ["1x"]).is_err());
        assert!(RingContext::new(FieldSpec::Rationals, ["x@"]).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(&["x", "y"]);
        let x = Polynomial::variable(&r, 0);
        let y = Polynomial::variable(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert!((&p * &Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let r = RingContext::new(FieldSpec::prime(2).unwrap(), ["x", "y"]).unwrap();
        let s = &Polynomial::variable(&r, 0) + &Polynomial::variable(&r, 1);
        assert_eq!(s.pow(2).to_string(), "x^2 + y^2");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::variable(&qring(&["x"]), 0);
        let b = Polynomial::variable(&qring(&["y"]), 0);
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch));
        assert_eq!(multiply_polynomials(&a, &b), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = qring(&["x", "y"]);
        let f = parse_polynomial("x^3 - x*y^2", &r).unwrap();
        let g = parse_polynomial("x + y", &r).unwrap();
        assert_eq!(f.exact_div(&g).unwrap().to_string(), "x^2 - x*y");
        assert_eq!(g.exact_div(&f), Err(Error::NotDivisible));
    }

    #[test]
    fn constant_term_and_coefficient() {
        let r = qring(&["x", "y"]);
        let f = parse_polynomial("3 + x*y - 2*y", &r).unwrap();
        assert_eq!(f.constant_term(), r.field().from_i64(3));
        assert_eq!(
            f.coefficient(&Monomial::new(vec![0, 1])),
            r.field().from_i64(-2)
        );
        assert_eq!(f.coefficient(&Monomial::new(vec![2, 0])), r.field().zero());
    }
}
