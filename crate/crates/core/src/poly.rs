//! Exact Laurent-polynomial arithmetic on the half-integer exponent grid,
//! and reduction into the quotient ring defined by `(t^m - 1, r)`.
//!
//! Everything is stored in the variable `u = t^{1/2}`: the exponent key of a
//! term is its u-exponent, so key `2k` means `t^k` and odd keys are genuine
//! half powers of `t`. Knot polynomials live on even u-exponents, polynomials
//! of two-component links on odd ones, and both share this one representation.
//! Coefficients are arbitrary-precision integers; zero coefficients are never
//! stored, so the zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NonExactDivision,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("polynomial is not the image of a z-polynomial under z = t^-1/2 - t^1/2")]
    NotAConwayImage,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Exact Laurent polynomial with integer coefficients on the `u = t^{1/2}`
/// exponent grid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// The single term `c * u^uexp`.
    pub fn monomial<C: Into<BigInt>>(uexp: i64, c: C) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(uexp, c);
        }
        Self { coeffs }
    }

    /// `t^k`, i.e. `u^{2k}`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(2 * k, 1)
    }

    /// `u^k = t^{k/2}`.
    pub fn u_pow(k: i64) -> Self {
        Self::monomial(k, 1)
    }

    /// Builds a polynomial from `(u-exponent, coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `u^uexp` (zero if absent).
    pub fn coeff(&self, uexp: i64) -> BigInt {
        self.coeffs.get(&uexp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_uexp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_uexp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, uexp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(uexp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `u^du`, shifting every exponent.
    pub fn shifted(&self, du: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + du, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t -> t^{-1}` (negates every u-exponent).
    pub fn exponent_negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `t = 1` (sum of coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// True when every u-exponent has the given parity (0 or 1).
    pub fn has_uexp_parity(&self, parity: i64) -> bool {
        self.coeffs.keys().all(|e| e.rem_euclid(2) == parity)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `q` with `self = b * q`, or an error when `b`
    /// is zero or the division leaves a remainder.
    pub fn div_exact(&self, b: &Self) -> Result<Self, PolyError> {
        if b.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift both operands onto the non-negative grid; exactness there is
        // equivalent to exactness in the Laurent ring.
        let sa = self.min_uexp().unwrap();
        let sb = b.min_uexp().unwrap();
        let mut rem = self.shifted(-sa);
        let div = b.shifted(-sb);
        let div_lead_exp = div.max_uexp().unwrap();
        let div_lead = div.coeff(div_lead_exp);
        let mut quot = Self::zero();
        while let Some(lead_exp) = rem.max_uexp() {
            if lead_exp < div_lead_exp {
                return Err(PolyError::NonExactDivision);
            }
            let lead = rem.coeff(lead_exp);
            let (q, r) = num_integer::div_rem(lead, div_lead.clone());
            if !r.is_zero() {
                return Err(PolyError::NonExactDivision);
            }
            let shift = lead_exp - div_lead_exp;
            for (e, c) in div.terms() {
                rem.add_term(e + shift, -(c * &q));
            }
            quot.add_term(shift, q);
        }
        Ok(quot.shifted(sa - sb))
    }

    /// Substitutes `z = t^{-1/2} - t^{1/2}` into a polynomial in the single
    /// variable `z`, where `self`'s exponent keys are read as z-exponents.
    ///
    /// The input must have non-negative exponents only.
    pub fn substitute_z(&self) -> Self {
        assert!(
            self.min_uexp().is_none_or(|e| e >= 0),
            "z-polynomial must have non-negative exponents"
        );
        let z = Self::from_terms(&[(-1, 1), (1, -1)]);
        let mut result = Self::zero();
        let mut zpow = Self::one();
        let mut cur = 0i64;
        for (&k, c) in self.terms() {
            while cur < k {
                zpow = &zpow * &z;
                cur += 1;
            }
            result = &result + &(&zpow * &Self::constant(c.clone()));
        }
        result
    }

    /// Rewrites an Alexander polynomial as a polynomial in `z`, inverting
    /// [`substitute_z`]. Fails when `self` is not in the image.
    pub fn conway_from_alexander(&self) -> Result<Self, PolyError> {
        let z = Self::from_terms(&[(-1, 1), (1, -1)]);
        let mut rem = self.clone();
        let mut conway = Self::zero();
        let mut zpow_cache: Vec<Self> = vec![Self::one()];
        while let Some(d) = rem.max_uexp() {
            if d < 0 {
                return Err(PolyError::NotAConwayImage);
            }
            while (zpow_cache.len() as i64) <= d {
                let next = zpow_cache.last().unwrap() * &z;
                zpow_cache.push(next);
            }
            // z^d has leading term (-1)^d u^d.
            let lead = rem.coeff(d);
            let zcoeff = if d % 2 == 0 {
                lead.clone()
            } else {
                -lead.clone()
            };
            let sub = &zpow_cache[d as usize] * &Self::constant(zcoeff.clone());
            rem = &rem - &sub;
            conway.add_term(d, zcoeff);
            if rem.max_uexp().is_some_and(|m| m >= d) {
                return Err(PolyError::NotAConwayImage);
            }
        }
        Ok(conway)
    }

    /// Reduces into the quotient ring `Z[t^{1/2},t^{-1/2}] / (t^m - 1, r)`:
    /// u-exponents are folded mod `2m` and coefficients mod `r`.
    pub fn reduce_mod(&self, modulus: &ModulusSpec) -> Residue {
        let period = 2 * modulus.power();
        let r = BigInt::from(modulus.prime());
        let mut folded: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in self.terms() {
            *folded
                .entry(e.rem_euclid(period))
                .or_insert_with(BigInt::zero) += c;
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in folded {
            let red = c.mod_floor_ref(&r);
            if !red.is_zero() {
                coeffs.insert(e, red.try_into().expect("residue coefficient fits i64"));
            }
        }
        Residue {
            modulus: modulus.clone(),
            coeffs,
        }
    }

    /// Structured form: u-exponent (as a string) to coefficient (as a string).
    pub fn to_exponent_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect()
    }

    /// Renders the polynomial read in the single variable `z`, highest power
    /// first, e.g. `z^2 + 1`.
    pub fn to_z_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            push_term(&mut out, i == 0, e, c, |e| match e {
                1 => "z".to_string(),
                k => format!("z^{k}"),
            });
        }
        out
    }
}

trait ModFloorRef {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt;
}

impl ModFloorRef for BigInt {
    fn mod_floor_ref(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn push_term<F>(out: &mut String, first: bool, uexp: i64, c: &BigInt, var: F)
where
    F: Fn(i64) -> String,
{
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mag = c.abs();
    if uexp == 0 {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(&var(uexp));
    } else {
        out.push_str(&format!("{}*{}", mag, var(uexp)));
    }
}

fn t_term_string(uexp: i64) -> String {
    if uexp % 2 == 0 {
        match uexp / 2 {
            1 => "t".to_string(),
            k => format!("t^{k}"),
        }
    } else {
        format!("t^{uexp}/2")
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical textual form: terms by ascending u-exponent, `t^e` with `e`
    /// a half-integer written as `k` or `k/2`, e.g. `t^-1 - 1 + t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            push_term(&mut out, i == 0, e, c, t_term_string);
        }
        write!(f, "{out}")
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyError;

    /// Parses the canonical textual form produced by `Display`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".to_string()));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut poly = Self::zero();
        let mut sign = 1i64;
        let mut expect_term = true;
        for tok in s.split_whitespace() {
            match tok {
                "+" if !expect_term => {
                    sign = 1;
                    expect_term = true;
                }
                "-" if !expect_term => {
                    sign = -1;
                    expect_term = true;
                }
                _ if expect_term => {
                    let (e, c) = parse_term(tok)?;
                    poly.add_term(e, c * sign);
                    expect_term = false;
                }
                _ => return Err(PolyError::Parse(format!("unexpected token '{tok}'"))),
            }
        }
        if expect_term {
            return Err(PolyError::Parse("trailing operator".to_string()));
        }
        Ok(poly)
    }
}

fn parse_term(tok: &str) -> Result<(i64, BigInt), PolyError> {
    let bad = |m: &str| PolyError::Parse(format!("bad term '{tok}': {m}"));
    let (mut tok, leading_neg) = match tok.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (tok, false),
    };
    let mut coeff = BigInt::one();
    if let Some((c, rest)) = tok.split_once('*') {
        coeff = c.parse().map_err(|_| bad("coefficient"))?;
        tok = rest;
    }
    let uexp = if let Some(rest) = tok.strip_prefix("t^") {
        if let Some(num) = rest.strip_suffix("/2") {
            num.parse::<i64>().map_err(|_| bad("half exponent"))?
        } else {
            2 * rest.parse::<i64>().map_err(|_| bad("exponent"))?
        }
    } else if tok == "t" {
        2
    } else {
        coeff = tok.parse().map_err(|_| bad("constant"))?;
        0
    };
    if leading_neg {
        coeff = -coeff;
    }
    Ok((uexp, coeff))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($op:ident :: $f:ident),*) => {$(
        impl $op for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $op<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// The ideal `(t^{r^s} - 1, r)` for a prime `r` and exponent `s >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModulusSpec {
    r: i64,
    s: u32,
    m: i64,
}

impl ModulusSpec {
    pub fn new(r: i64, s: u32) -> Result<Self, PolyError> {
        if r < 2 || !is_prime(r) {
            return Err(PolyError::InvalidModulus(format!("{r} is not a prime")));
        }
        if s < 1 {
            return Err(PolyError::InvalidModulus(
                "exponent must be >= 1".to_string(),
            ));
        }
        let m = r
            .checked_pow(s)
            .ok_or_else(|| PolyError::InvalidModulus(format!("{r}^{s} overflows")))?;
        Ok(Self { r, s, m })
    }

    pub fn prime(&self) -> i64 {
        self.r
    }

    pub fn exponent(&self) -> u32 {
        self.s
    }

    /// The prime power `m = r^s`.
    pub fn power(&self) -> i64 {
        self.m
    }
}

impl fmt::Display for ModulusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t^{} - 1, {})", self.m, self.r)
    }
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A class in `Z[t^{1/2},t^{-1/2}] / (t^m - 1, r)`: u-exponents in `[0, 2m)`
/// and coefficients in `[0, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    modulus: ModulusSpec,
    coeffs: BTreeMap<i64, i64>,
}

impl Residue {
    pub fn modulus(&self) -> &ModulusSpec {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &i64)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Residue) -> Residue {
        assert_eq!(
            self.modulus, other.modulus,
            "residues from different quotient rings"
        );
        let mut out = self.coeffs.clone();
        for (&e, &c) in &other.coeffs {
            let v = (out.get(&e).copied().unwrap_or(0) + c).rem_euclid(self.modulus.r);
            if v == 0 {
                out.remove(&e);
            } else {
                out.insert(e, v);
            }
        }
        Residue {
            modulus: self.modulus.clone(),
            coeffs: out,
        }
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        assert_eq!(
            self.modulus, other.modulus,
            "residues from different quotient rings"
        );
        let period = 2 * self.modulus.m;
        let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
        for (&ea, &ca) in &self.coeffs {
            for (&eb, &cb) in &other.coeffs {
                let e = (ea + eb).rem_euclid(period);
                let v = acc.entry(e).or_insert(0);
                *v = (*v + ca * cb).rem_euclid(self.modulus.r);
            }
        }
        acc.retain(|_, v| *v != 0);
        Residue {
            modulus: self.modulus.clone(),
            coeffs: acc,
        }
    }

    pub fn to_exponent_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect()
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.coeffs.iter().enumerate() {
            push_term(&mut out, i == 0, e, &BigInt::from(c), t_term_string);
        }
        write!(f, "{out}")
    }
}

/// Fraction-free determinant of a square matrix of Laurent polynomials
/// (Bareiss elimination with row pivoting).
pub(crate) fn det_bareiss(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, pivot);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
