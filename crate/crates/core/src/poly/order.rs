use core::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders used by the Gröbner kernel.
///
/// Variables are ranked by their position in the ring: the first variable is
/// the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block order eliminating the first `k` variables: degrevlex on the
    /// first block, ties broken by degrevlex on the rest.
    Elimination(usize),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    /// Compares two monomials of equal length. `Greater` means `a > b`.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| degrevlex(a.exponents(), b.exponents())),
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(a.exponents().len());
                let (a1, a2) = a.exponents().split_at(k);
                let (b1, b2) = b.exponents().split_at(k);
                degrevlex(a1, b1).then_with(|| degrevlex(a2, b2))
            }
        }
    }

    pub fn name(&self) -> alloc::string::String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Elimination(k) => alloc::format!("elim({k})"),
        }
    }
}

/// Checked comparison of `u` and `v` under `order`.
pub fn compare_monomials(order: MonomialOrder, u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.nvars() != v.nvars() {
        return Err(Error::LengthMismatch {
            expected: u.nvars(),
            found: v.nvars(),
        });
    }
    Ok(order.cmp(u, v))
}

/// Graded lex: the order in which printed polynomials list their terms.
pub(crate) fn deglex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.exponents().cmp(b.exponents()))
}
