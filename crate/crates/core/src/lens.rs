//! Lens spaces as arithmetic objects: linking forms, the
//! orientation-preserving homeomorphism and homotopy classifications, and
//! canonical forms.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LensError {
    #[error("p must be >= 1, got {0}")]
    InvalidP(i64),
    #[error("q must satisfy 1 <= q < p (or q = 0 when p = 1), got p={p}, q={q}")]
    InvalidQ { p: i64, q: i64 },
    #[error("{a} has no inverse mod {p}")]
    NonCoprime { a: i64, p: i64 },
}

/// Inverse of `a` modulo `p`, normalized into `[0, p)`.
pub fn mod_inverse(a: i64, p: i64) -> Result<i64, LensError> {
    if p < 1 {
        return Err(LensError::InvalidP(p));
    }
    if p == 1 {
        return Ok(0);
    }
    let e = a.extended_gcd(&p);
    if e.gcd != 1 {
        return Err(LensError::NonCoprime { a, p });
    }
    Ok(e.x.rem_euclid(p))
}

/// A value in `Q/Z`, stored as a reduced fraction in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QmodZ {
    numerator: i64,
    denominator: i64,
}

impl QmodZ {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator >= 1, "denominator must be positive");
        let n = numerator.rem_euclid(denominator);
        if n == 0 {
            return Self {
                numerator: 0,
                denominator: 1,
            };
        }
        let g = n.gcd(&denominator);
        Self {
            numerator: n / g,
            denominator: denominator / g,
        }
    }

    pub fn zero() -> Self {
        Self {
            numerator: 0,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

impl Ord for QmodZ {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // compare as rationals; denominators are positive
        (self.numerator as i128 * other.denominator as i128)
            .cmp(&(other.numerator as i128 * self.denominator as i128))
    }
}

impl PartialOrd for QmodZ {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The lens space `L(p, q)` with `gcd(p, q) = 1`, carrying the derived
/// inverse `qbar` with `q * qbar = 1 (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: i64,
    q: i64,
    qbar: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self, LensError> {
        if p < 1 {
            return Err(LensError::InvalidP(p));
        }
        let valid = if p == 1 { q == 0 } else { (1..p).contains(&q) };
        if !valid {
            return Err(LensError::InvalidQ { p, q });
        }
        if p > 1 && p.gcd(&q) != 1 {
            return Err(LensError::InvalidQ { p, q });
        }
        let qbar = if p == 1 { 0 } else { mod_inverse(q, p)? };
        Ok(Self { p, q, qbar })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn qbar(&self) -> i64 {
        self.qbar
    }

    /// Linking form on `H_1 = Z/p` generated by the core longitude:
    /// `lk(a [l], b [l]) = a b q / p` in `Q/Z`.
    pub fn linking_form(&self, a: i64, b: i64) -> QmodZ {
        let p = self.p as i128;
        let val = (a as i128).rem_euclid(p) * (b as i128).rem_euclid(p) % p * (self.q as i128) % p;
        QmodZ::new(val as i64, self.p)
    }

    /// Orientation-preserving homeomorphism classification:
    /// `p = p'` and (`q = q'` or `q q' = 1`) mod `p`.
    pub fn homeomorphic(&self, other: &LensSpace) -> bool {
        if self.p != other.p {
            return false;
        }
        let p = self.p;
        (self.q - other.q).rem_euclid(p) == 0 || (self.q * other.q).rem_euclid(p) == 1 % p
    }

    /// Orientation-preserving homotopy classification: `p = p'` and `q q'`
    /// is a quadratic residue mod `p` (tested by enumeration).
    pub fn homotopy_equivalent(&self, other: &LensSpace) -> bool {
        if self.p != other.p {
            return false;
        }
        let p = self.p;
        let target = (self.q * other.q).rem_euclid(p);
        (0..p).any(|n| (n * n).rem_euclid(p) == target)
    }

    /// The homotopy invariant `{ n^2 q / p : 1 <= n < p }` as a set of
    /// reduced values in `Q/Z`.
    pub fn invariant_set(&self) -> BTreeSet<QmodZ> {
        (1..self.p).map(|n| self.linking_form(n, n)).collect()
    }

    /// Canonical representative of the homeomorphism class:
    /// `(p, min(q, qbar))`.
    pub fn normal_form(&self) -> LensSpace {
        LensSpace::new(self.p, self.q.min(self.qbar)).expect("normal form stays valid")
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lens(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(2, 5).unwrap(), 3);
        assert_eq!(mod_inverse(1, 7).unwrap(), 1);
        assert_eq!(mod_inverse(3, 8).unwrap(), 3);
        assert_eq!(mod_inverse(5, 1).unwrap(), 0);
        assert_eq!(mod_inverse(2, 4), Err(LensError::NonCoprime { a: 2, p: 4 }));
        assert_eq!(mod_inverse(-3, 7).unwrap(), 2);
    }

    #[test]
    fn lens_space_construction() {
        let l = lens(7, 2);
        assert_eq!(l.qbar(), 4);
        assert!(LensSpace::new(6, 2).is_err());
        assert!(LensSpace::new(5, 5).is_err());
        assert!(LensSpace::new(5, 0).is_err());
        assert!(LensSpace::new(1, 0).is_ok());
    }

    #[test]
    fn linking_form_examples() {
        assert_eq!(lens(5, 1).linking_form(1, 1), QmodZ::new(1, 5));
        // 9 * 2 = 18 = 4 mod 7
        assert_eq!(lens(7, 2).linking_form(3, 3), QmodZ::new(4, 7));
        assert_eq!(lens(7, 3).linking_form(0, 5), QmodZ::zero());
    }

    #[test]
    fn linking_form_is_symmetric_and_bilinear() {
        for p in 1..=30i64 {
            for q in 0..p.max(1) {
                let Ok(l) = LensSpace::new(p, if p == 1 { 0 } else { q }) else {
                    continue;
                };
                for a in 0..p {
                    for b in 0..p {
                        assert_eq!(l.linking_form(a, b), l.linking_form(b, a));
                        let expected = QmodZ::new((a * b).rem_euclid(p) * l.q(), p);
                        assert_eq!(l.linking_form(a, b), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn homeomorphic_examples() {
        assert!(!lens(7, 1).homeomorphic(&lens(7, 2)));
        assert!(lens(7, 2).homeomorphic(&lens(7, 4)));
        assert!(lens(5, 2).homeomorphic(&lens(5, 3)));
        assert!(!lens(5, 2).homeomorphic(&lens(7, 2)));
    }

    #[test]
    fn homotopy_equivalent_examples() {
        // 2 = 3^2 mod 7
        assert!(lens(7, 1).homotopy_equivalent(&lens(7, 2)));
        assert!(lens(7, 1).homotopy_equivalent(&lens(7, 1)));
        // squares mod 5 are {0, 1, 4}
        assert!(!lens(5, 1).homotopy_equivalent(&lens(5, 2)));
    }

    #[test]
    fn invariant_set_examples() {
        let set: Vec<String> = lens(5, 1)
            .invariant_set()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(set, ["1/5", "4/5"]);
        let set: Vec<String> = lens(2, 1)
            .invariant_set()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(set, ["1/2"]);
        let set: Vec<String> = lens(7, 1)
            .invariant_set()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(set, ["1/7", "2/7", "4/7"]);
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(lens(7, 4).normal_form(), lens(7, 2));
        assert_eq!(lens(5, 2).normal_form(), lens(5, 2));
        assert_eq!(lens(9, 1).normal_form(), lens(9, 1));
    }

    fn all_lens_spaces(pmax: i64) -> Vec<LensSpace> {
        let mut v = vec![lens(1, 0)];
        for p in 2..=pmax {
            for q in 1..p {
                if let Ok(l) = LensSpace::new(p, q) {
                    v.push(l);
                }
            }
        }
        v
    }

    #[test]
    fn classification_invariants_to_p30() {
        let spaces = all_lens_spaces(30);
        for l in &spaces {
            assert!(l.homeomorphic(l));
            assert_eq!(l.normal_form().normal_form(), l.normal_form());
        }
        for l in &spaces {
            for l2 in &spaces {
                let homeo = l.homeomorphic(l2);
                assert_eq!(homeo, l2.homeomorphic(l), "symmetry {l} {l2}");
                assert_eq!(
                    homeo,
                    l.normal_form() == l2.normal_form(),
                    "normal form {l} {l2}"
                );
                if homeo {
                    assert!(l.homotopy_equivalent(l2), "homeo => homotopy {l} {l2}");
                }
                if l.homotopy_equivalent(l2) {
                    assert_eq!(
                        l.invariant_set(),
                        l2.invariant_set(),
                        "invariant set {l} {l2}"
                    );
                }
            }
        }
        // transitivity within each p via normal-form characterization
        for l in &spaces {
            for l2 in &spaces {
                for l3 in &spaces {
                    if l.homeomorphic(l2) && l2.homeomorphic(l3) {
                        assert!(l.homeomorphic(l3), "transitivity {l} {l2} {l3}");
                    }
                }
            }
        }
    }
}
