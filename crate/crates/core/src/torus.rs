//! Torus knots: braid presentations, the closed-form Alexander polynomial,
//! and the lift of generator knots of `L(p, q)` to the universal cover.

use num_integer::Integer;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::poly::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusError {
    #[error("first torus parameter must be nonzero")]
    ZeroParameter,
    #[error("({a}, {b}) is a torus link, not a knot")]
    TorusLink { a: i64, b: i64 },
    #[error("p and q must be coprime, got p={p}, q={q}")]
    NonCoprimePQ { p: i64, q: i64 },
    #[error("n and p must be coprime, got p={p}, n={n}")]
    NonCoprimeNP { p: i64, n: i64 },
    #[error("class index must satisfy 1 <= n < p, got p={p}, n={n}")]
    ClassOutOfRange { p: i64, n: i64 },
}

/// Parameters `(a, b)` of a torus knot; any pair with `|a| <= 1` or
/// `|b| <= 1` denotes the unknot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusParams {
    a: i64,
    b: i64,
}

impl TorusParams {
    /// Validates that the pair is a knot: when both parameters have absolute
    /// value at least 2 (or one does and the other is zero) they must be
    /// coprime.
    pub fn new(a: i64, b: i64) -> Result<Self, TorusError> {
        let (aa, ab) = (a.abs(), b.abs());
        if aa >= 2 && ab >= 2 && aa.gcd(&ab) != 1 {
            return Err(TorusError::TorusLink { a, b });
        }
        if (aa >= 2 && b == 0) || (a == 0 && ab >= 2) {
            return Err(TorusError::TorusLink { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn is_unknot(&self) -> bool {
        self.a.abs() <= 1 || self.b.abs() <= 1
    }

    /// Genus of the torus knot: `(|a| - 1)(|b| - 1) / 2`.
    pub fn genus(&self) -> i64 {
        if self.is_unknot() {
            0
        } else {
            (self.a.abs() - 1) * (self.b.abs() - 1) / 2
        }
    }
}

/// The braid `(sigma_1 ... sigma_{|a|-1})^b` in `B_{|a|}`, whose closure is
/// the `(a, b)` torus knot; for `|a| = 1` the empty word in `B_1`.
pub fn torus_braid(tp: TorusParams) -> Result<BraidWord, TorusError> {
    if tp.a == 0 {
        return Err(TorusError::ZeroParameter);
    }
    let n = tp.a.unsigned_abs() as usize;
    if n == 1 {
        return Ok(BraidWord::new(1, Vec::new()).expect("valid"));
    }
    let run: Vec<i32> = (1..n as i32).collect();
    let once = BraidWord::new(n, run).expect("valid run");
    let body = if tp.b >= 0 { once } else { once.inverse() };
    Ok(body.repeat(tp.b.unsigned_abs() as usize))
}

/// Closed-form Conway-normalized Alexander polynomial of the `(a, b)` torus
/// knot:
///
/// ```text
/// t^-g (1 - t)(1 - t^{ab}) / ((1 - t^a)(1 - t^b)),   g = (ab + 1 - a - b)/2
/// ```
///
/// computed by exact division on the absolute values (the polynomial is
/// mirror-invariant for knots); `1` when the parameters denote the unknot.
pub fn torus_alexander_closed(tp: TorusParams) -> LaurentPoly {
    if tp.is_unknot() {
        return LaurentPoly::one();
    }
    let a = tp.a.abs();
    let b = tp.b.abs();
    let one_minus = |k: i64| &LaurentPoly::one() - &LaurentPoly::t_pow(k);
    let num = &one_minus(1) * &one_minus(a * b);
    let den = &one_minus(a) * &one_minus(b);
    let quotient = num
        .div_exact(&den)
        .expect("torus closed form divides exactly");
    quotient.shifted(-2 * tp.genus())
}

/// Lift of the generator knot `K_n` of `L(p, q)` to the universal cover:
/// the `(n, p - qn)` torus knot.
pub fn lift_generator(p: i64, q: i64, n: i64) -> Result<TorusParams, TorusError> {
    if p < 1 || p.gcd(&q) != 1 {
        return Err(TorusError::NonCoprimePQ { p, q });
    }
    if !(1..p).contains(&n) {
        return Err(TorusError::ClassOutOfRange { p, n });
    }
    if n.gcd(&p) != 1 {
        return Err(TorusError::NonCoprimeNP { p, n });
    }
    Ok(TorusParams::new(n, p - q * n).expect("lift parameters are coprime"))
}
