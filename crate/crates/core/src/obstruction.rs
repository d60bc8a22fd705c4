//! Congruence obstructions for knots covering generators of `H_1(L(p, q))`,
//! per-prime-power reports, the empirical periodic-link congruence verifier,
//! and the reproducibility sweeps built on them.
//!
//! The central test: a generator class `n` lifts to the `(n, p - qn)` torus
//! knot, and when that lift's Alexander polynomial reduces to `1` in
//! `(t^{r^s} - 1, r)` for a prime power dividing `p`, the class index must
//! satisfy `n^2 = 1` or `n^2 = qbar^2 (mod r^s)`. The sweep checks the
//! implication exhaustively; the implication is one-directional, with
//! `(p, q, n) = (8, 1, 3)` as the frozen converse-failure witness.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::braid::{BraidError, BraidWord, DeltaCache, PeriodicSpec, TwistConvention};
use crate::lens::{mod_inverse, QmodZ};
use crate::poly::{LaurentPoly, ModulusSpec, PolyError, Residue};
use crate::torus::{lift_generator, torus_alexander_closed, TorusError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("p must be >= 2, got {0}")]
    PTooSmall(i64),
    #[error("prime power {m} does not divide p = {p}")]
    ModulusNotDividing { m: i64, p: i64 },
    #[error("{a} and {b} must be coprime")]
    NotCoprime { a: i64, b: i64 },
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// The maximal prime powers dividing `p`: one `(r, s)` with `r^s || p` per
/// prime divisor `r`, in ascending order of `r`.
pub fn maximal_prime_powers(p: i64) -> Result<Vec<ModulusSpec>, ObstructionError> {
    if p < 2 {
        return Err(ObstructionError::PTooSmall(p));
    }
    let mut rest = p;
    let mut out = Vec::new();
    let mut r = 2;
    while r * r <= rest {
        if rest % r == 0 {
            let mut s = 0u32;
            while rest % r == 0 {
                rest /= r;
                s += 1;
            }
            out.push(ModulusSpec::new(r, s)?);
        }
        r += 1;
    }
    if rest > 1 {
        out.push(ModulusSpec::new(rest, 1)?);
    }
    Ok(out)
}

/// True when the Alexander polynomial of the lift of the class-`n` generator
/// knot reduces to `1` modulo `(t^{r^s} - 1, r)`.
pub fn theorem1_congruence(
    p: i64,
    q: i64,
    n: i64,
    modulus: &ModulusSpec,
) -> Result<bool, ObstructionError> {
    if p % modulus.power() != 0 {
        return Err(ObstructionError::ModulusNotDividing {
            m: modulus.power(),
            p,
        });
    }
    let lift = lift_generator(p, q, n)?;
    let delta = torus_alexander_closed(lift);
    Ok(delta.reduce_mod(modulus) == LaurentPoly::one().reduce_mod(modulus))
}

/// Which congruence branch a class index satisfies modulo a prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `n^2 = 1` only.
    Unit,
    /// `n^2 = qbar^2` only (equivalently `n^2 q^2 = 1`).
    Qbar,
    Both,
    Neither,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Unit => write!(f, "UNIT"),
            Branch::Qbar => write!(f, "QBAR"),
            Branch::Both => write!(f, "BOTH"),
            Branch::Neither => write!(f, "NEITHER"),
        }
    }
}

/// Classifies `n` against the congruences `n^2 = 1` and `n^2 q^2 = 1`
/// modulo `r^s`.
pub fn theorem1_predicate(
    n: i64,
    q: i64,
    modulus: &ModulusSpec,
) -> Result<Branch, ObstructionError> {
    let r = modulus.prime();
    if n.gcd(&r) != 1 {
        return Err(ObstructionError::NotCoprime { a: n, b: r });
    }
    if q.gcd(&r) != 1 {
        return Err(ObstructionError::NotCoprime { a: q, b: r });
    }
    let m = modulus.power() as i128;
    let n2 = (n as i128) * (n as i128);
    let unit = n2.rem_euclid(m) == 1 % m;
    let qbar = (n2 * (q as i128) * (q as i128)).rem_euclid(m) == 1 % m;
    Ok(match (unit, qbar) {
        (true, true) => Branch::Both,
        (true, false) => Branch::Unit,
        (false, true) => Branch::Qbar,
        (false, false) => Branch::Neither,
    })
}

/// Per-prime-power record in an [`ObstructionReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub modulus: ModulusSpec,
    pub congruence_holds: bool,
    pub branch: Branch,
}

/// Conclusion of the report taken directly modulo `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalConclusion {
    /// `n^2 = 1 (mod p)`.
    NSquaredIsOne,
    /// `n^2 = qbar^2 (mod p)`.
    NSquaredIsQbarSquared,
    /// Every factor has a branch, but no single branch holds modulo `p`.
    Mixed,
    /// Some factor reports `NEITHER`: no knot in class `n` has trivial lift
    /// polynomial.
    Excluded,
}

impl fmt::Display for GlobalConclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlobalConclusion::NSquaredIsOne => write!(f, "n^2 = 1 (mod p)"),
            GlobalConclusion::NSquaredIsQbarSquared => write!(f, "n^2 = qbar^2 (mod p)"),
            GlobalConclusion::Mixed => write!(f, "MIXED"),
            GlobalConclusion::Excluded => write!(f, "EXCLUDED"),
        }
    }
}

/// Aggregated congruence data for the class-`n` generator knot of `L(p, q)`:
/// one record per maximal prime power of `p`, the conclusion taken modulo
/// `p`, and the self-linking value `n^2 q / p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub p: i64,
    pub q: i64,
    pub n: i64,
    pub qbar: i64,
    pub per_factor: Vec<FactorReport>,
    pub global_conclusion: GlobalConclusion,
    pub linking_value: QmodZ,
}

pub fn obstruction_report(p: i64, q: i64, n: i64) -> Result<ObstructionReport, ObstructionError> {
    if p < 2 {
        return Err(ObstructionError::PTooSmall(p));
    }
    let lift = lift_generator(p, q, n)?;
    let delta = torus_alexander_closed(lift);
    let one = LaurentPoly::one();
    let mut per_factor = Vec::new();
    for modulus in maximal_prime_powers(p)? {
        let congruence_holds = delta.reduce_mod(&modulus) == one.reduce_mod(&modulus);
        let branch = theorem1_predicate(n, q, &modulus)?;
        per_factor.push(FactorReport {
            modulus,
            congruence_holds,
            branch,
        });
    }
    let pw = p as i128;
    let n2 = (n as i128) * (n as i128);
    let global_conclusion = if n2.rem_euclid(pw) == 1 % pw {
        GlobalConclusion::NSquaredIsOne
    } else if (n2 * (q as i128) * (q as i128)).rem_euclid(pw) == 1 % pw {
        GlobalConclusion::NSquaredIsQbarSquared
    } else if per_factor.iter().any(|f| f.branch == Branch::Neither) {
        GlobalConclusion::Excluded
    } else {
        GlobalConclusion::Mixed
    };
    let lk = (n2.rem_euclid(pw) * (q as i128).rem_euclid(pw)).rem_euclid(pw) as i64;
    Ok(ObstructionReport {
        p,
        q,
        n,
        qbar: mod_inverse(q.rem_euclid(p), p).expect("q coprime to p"),
        per_factor,
        global_conclusion,
        linking_value: QmodZ::new(lk, p),
    })
}

/// Everything `lemma4_verify` computes, kept for rendering: the two closure
/// words, their polynomials, and the residues that must agree.
#[derive(Debug, Clone)]
pub struct Lemma4Report {
    pub convention: TwistConvention,
    pub base_word: BraidWord,
    pub changed_word: BraidWord,
    pub base_delta: LaurentPoly,
    pub changed_delta: LaurentPoly,
    pub base_residue: Residue,
    pub changed_residue: Residue,
}

impl Lemma4Report {
    pub fn holds(&self) -> bool {
        self.base_residue == self.changed_residue
    }
}

/// Compares the Alexander polynomials of `L(q)` and of the closure obtained
/// by changing the orbit of the pattern crossing at `pos`, reduced modulo
/// `(t^{r^s} - 1, r)`.
pub fn lemma4_report(
    spec: &PeriodicSpec,
    pos: usize,
    convention: TwistConvention,
    cache: &mut DeltaCache,
) -> Result<Lemma4Report, ObstructionError> {
    let changed = spec.orbit_crossing_change(pos)?;
    let base_word = spec.periodic_closure_with(convention);
    let changed_word = changed.periodic_closure_with(convention);
    let base_delta = cache.get_or_compute(&base_word);
    let changed_delta = cache.get_or_compute(&changed_word);
    let modulus = spec.modulus();
    Ok(Lemma4Report {
        convention,
        base_word,
        changed_word,
        base_residue: base_delta.reduce_mod(modulus),
        changed_residue: changed_delta.reduce_mod(modulus),
        base_delta,
        changed_delta,
    })
}

/// True when the congruence of the periodic-link construction holds at
/// `pos`; a `false` return signals an implementation bug, not new topology.
pub fn lemma4_verify(spec: &PeriodicSpec, pos: usize) -> Result<bool, ObstructionError> {
    let mut cache = DeltaCache::new();
    Ok(lemma4_report(spec, pos, TwistConvention::NegativeQ, &mut cache)?.holds())
}

/// A congruence-vs-predicate check that failed in the forward sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepViolation {
    pub p: i64,
    pub q: i64,
    pub n: i64,
    pub modulus: ModulusSpec,
}

impl fmt::Display for SweepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} q={} n={} mod (t^{} - 1, {}): congruence holds but branch is NEITHER",
            self.p,
            self.q,
            self.n,
            self.modulus.power(),
            self.modulus.prime()
        )
    }
}

/// Result of the exhaustive forward sweep over `(p, q, n)` triples.
#[derive(Debug, Clone)]
pub struct TheoremSweep {
    pub pmax: i64,
    pub triples: usize,
    pub checks: usize,
    pub congruences_held: usize,
    pub violations: Vec<SweepViolation>,
    /// Outcome of the fixed converse-failure witness `(8, 1, 3)`; `None`
    /// when `pmax < 8` keeps it out of range.
    pub witness_ok: Option<bool>,
}

impl TheoremSweep {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.witness_ok != Some(false)
    }
}

/// Sweeps every `p <= pmax`, every `q` and `n` coprime to `p` in `[1, p)`,
/// and every maximal prime power of `p`, recording each case where the lift
/// congruence holds while the class predicate reports `NEITHER`. Results are
/// deterministic and ordered by `(p, q, n)`.
pub fn theorem1_forward_sweep(pmax: i64) -> TheoremSweep {
    let mut sweep = TheoremSweep {
        pmax,
        triples: 0,
        checks: 0,
        congruences_held: 0,
        violations: Vec::new(),
        witness_ok: None,
    };
    // lifts repeat across triples; key by the mirror-normalized pair
    let mut torus_memo: HashMap<(i64, i64), LaurentPoly> = HashMap::new();
    for p in 2..=pmax {
        let factors = maximal_prime_powers(p).expect("p >= 2");
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            for n in 1..p {
                if p.gcd(&n) != 1 {
                    continue;
                }
                sweep.triples += 1;
                let lift = lift_generator(p, q, n).expect("sweep preconditions");
                let delta = torus_memo
                    .entry((lift.a(), lift.b().abs()))
                    .or_insert_with(|| torus_alexander_closed(lift))
                    .clone();
                for modulus in &factors {
                    sweep.checks += 1;
                    let holds = delta.reduce_mod(modulus) == LaurentPoly::one().reduce_mod(modulus);
                    if holds {
                        sweep.congruences_held += 1;
                        let branch =
                            theorem1_predicate(n, q, modulus).expect("sweep preconditions");
                        if branch == Branch::Neither {
                            sweep.violations.push(SweepViolation {
                                p,
                                q,
                                n,
                                modulus: modulus.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    if pmax >= 8 {
        // (8, 1, 3): n^2 = 9 = 1 (mod 8) holds, yet the lift T(3,5) does not
        // reduce to 1, so the implication cannot be reversed. With q = 1 the
        // two branch congruences coincide, so the branch reads BOTH.
        let witness_modulus = ModulusSpec::new(2, 3).expect("valid");
        let congruence = theorem1_congruence(8, 1, 3, &witness_modulus).expect("witness inputs");
        let branch = theorem1_predicate(3, 1, &witness_modulus).expect("witness inputs");
        sweep.witness_ok = Some(!congruence && matches!(branch, Branch::Unit | Branch::Both));
    }
    sweep
}

/// One failed periodic-congruence check in the randomized suite.
#[derive(Debug, Clone)]
pub struct Lemma4Failure {
    pub spec: PeriodicSpec,
    pub pos: usize,
    pub convention: TwistConvention,
}

impl fmt::Display for Lemma4Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pattern '{}' mod (t^{} - 1, {}) q={} pos={} convention={}",
            self.spec.pattern(),
            self.spec.modulus().power(),
            self.spec.modulus().prime(),
            self.spec.q(),
            self.pos,
            self.convention
        )
    }
}

/// Outcome of the randomized periodic-congruence suite.
#[derive(Debug, Clone)]
pub struct Lemma4Sweep {
    pub seed: u64,
    pub specs: usize,
    pub checks: usize,
    pub failures: Vec<Lemma4Failure>,
}

impl Lemma4Sweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Seeded random periodic specs: patterns on 2 or 3 strands of length 1..=6,
/// axis coefficient `q` in `[-2, 2]`, period from `{(2,1), (3,1), (2,2)}`.
pub fn lemma4_random_specs(seed: u64, count: usize) -> Vec<PeriodicSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let moduli = [
        ModulusSpec::new(2, 1).expect("valid"),
        ModulusSpec::new(3, 1).expect("valid"),
        ModulusSpec::new(2, 2).expect("valid"),
    ];
    (0..count)
        .map(|_| {
            let strands = rng.gen_range(2..=3usize);
            let len = rng.gen_range(1..=6usize);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let idx = rng.gen_range(1..strands) as i32;
                    if rng.gen_bool(0.5) {
                        idx
                    } else {
                        -idx
                    }
                })
                .collect();
            let pattern = BraidWord::new(strands, letters).expect("valid letters");
            let modulus = moduli[rng.gen_range(0..moduli.len())].clone();
            let q = rng.gen_range(-2..=2i64);
            PeriodicSpec::new(pattern, modulus, q).expect(">= 2 strands")
        })
        .collect()
}

/// Runs every orbit position of every spec under both twist-sign
/// conventions, sharing one polynomial cache across the suite.
pub fn lemma4_random_suite(seed: u64, count: usize) -> Lemma4Sweep {
    let mut cache = DeltaCache::new();
    lemma4_random_suite_with_cache(seed, count, &mut cache)
}

/// As [`lemma4_random_suite`], reusing polynomials from `cache`.
pub fn lemma4_random_suite_with_cache(
    seed: u64,
    count: usize,
    cache: &mut DeltaCache,
) -> Lemma4Sweep {
    let specs = lemma4_random_specs(seed, count);
    let mut sweep = Lemma4Sweep {
        seed,
        specs: specs.len(),
        checks: 0,
        failures: Vec::new(),
    };
    for spec in &specs {
        for pos in 0..spec.pattern().len() {
            for convention in TwistConvention::BOTH {
                sweep.checks += 1;
                let report =
                    lemma4_report(spec, pos, convention, cache).expect("positions are in range");
                if !report.holds() {
                    sweep.failures.push(Lemma4Failure {
                        spec: spec.clone(),
                        pos,
                        convention,
                    });
                }
            }
        }
    }
    sweep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modulus(r: i64, s: u32) -> ModulusSpec {
        ModulusSpec::new(r, s).unwrap()
    }

    #[test]
    fn maximal_prime_power_examples() {
        let specs = maximal_prime_powers(12).unwrap();
        assert_eq!(
            specs
                .iter()
                .map(|m| (m.prime(), m.exponent()))
                .collect::<Vec<_>>(),
            [(2, 2), (3, 1)]
        );
        let specs = maximal_prime_powers(7).unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!((specs[0].prime(), specs[0].exponent()), (7, 1));
        let specs = maximal_prime_powers(8).unwrap();
        assert_eq!((specs[0].prime(), specs[0].exponent()), (2, 3));
        assert!(maximal_prime_powers(1).is_err());
    }

    #[test]
    fn theorem1_congruence_examples() {
        // lift of (5,1,2) is the trefoil; t^4 + 4 + t mod (t^5 - 1, 5) is not 1
        assert!(!theorem1_congruence(5, 1, 2, &modulus(5, 1)).unwrap());
        // lift of (5,2,3) is T(3,-1), the unknot
        assert!(theorem1_congruence(5, 2, 3, &modulus(5, 1)).unwrap());
        // lift of (8,1,3) is T(3,5): reduction mod (t^8 - 1, 2) is not 1
        assert!(!theorem1_congruence(8, 1, 3, &modulus(2, 3)).unwrap());
        // class 1 lifts to the unknot
        for (p, q) in [(5, 1), (12, 5), (9, 2)] {
            for m in maximal_prime_powers(p).unwrap() {
                assert!(theorem1_congruence(p, q, 1, &m).unwrap());
            }
        }
        assert!(theorem1_congruence(5, 1, 2, &modulus(3, 1)).is_err());
    }

    #[test]
    fn theorem1_congruence_residue_values() {
        // frozen from hand reduction of the trefoil polynomial
        let delta = torus_alexander_closed(lift_generator(5, 1, 2).unwrap());
        let residue = delta.reduce_mod(&modulus(5, 1));
        assert_eq!(residue.to_string(), "4 + t + t^4");
        // frozen from hand reduction of the T(3,5) polynomial
        let delta = torus_alexander_closed(lift_generator(8, 1, 3).unwrap());
        let residue = delta.reduce_mod(&modulus(2, 3));
        assert_eq!(residue.to_string(), "1 + t + t^3 + t^5 + t^7");
    }

    #[test]
    fn theorem1_predicate_examples() {
        assert_eq!(
            theorem1_predicate(2, 1, &modulus(5, 1)).unwrap(),
            Branch::Neither
        );
        // n^2 = 2, qbar = 4, qbar^2 = 2 mod 7
        assert_eq!(
            theorem1_predicate(3, 2, &modulus(7, 1)).unwrap(),
            Branch::Qbar
        );
        assert!(matches!(
            theorem1_predicate(1, 3, &modulus(7, 1)).unwrap(),
            Branch::Unit | Branch::Both
        ));
        // 9 = 1 mod 8 and qbar = 1
        assert_eq!(
            theorem1_predicate(3, 1, &modulus(2, 3)).unwrap(),
            Branch::Both
        );
        assert!(theorem1_predicate(2, 1, &modulus(2, 1)).is_err());
        assert!(theorem1_predicate(1, 4, &modulus(2, 2)).is_err());
    }

    #[test]
    fn obstruction_report_examples() {
        let report = obstruction_report(5, 1, 2).unwrap();
        assert_eq!(report.global_conclusion, GlobalConclusion::Excluded);
        assert_eq!(report.linking_value, QmodZ::new(4, 5));
        assert_eq!(report.per_factor.len(), 1);
        assert_eq!(report.per_factor[0].branch, Branch::Neither);
        assert!(!report.per_factor[0].congruence_holds);

        let report = obstruction_report(7, 2, 3).unwrap();
        assert_eq!(
            report.global_conclusion,
            GlobalConclusion::NSquaredIsQbarSquared
        );
        assert_eq!(report.linking_value, QmodZ::new(4, 7));
        assert_eq!(report.qbar, 4);

        for (p, q) in [(5, 2), (9, 4), (12, 7)] {
            let report = obstruction_report(p, q, 1).unwrap();
            assert_eq!(report.global_conclusion, GlobalConclusion::NSquaredIsOne);
            assert_eq!(report.linking_value, QmodZ::new(q, p));
        }
    }

    #[test]
    fn neither_branch_forces_failed_congruence() {
        for p in 2..=20i64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for n in 1..p {
                    if p.gcd(&n) != 1 {
                        continue;
                    }
                    let report = obstruction_report(p, q, n).unwrap();
                    for factor in &report.per_factor {
                        if factor.branch == Branch::Neither {
                            assert!(!factor.congruence_holds, "violation at p={p} q={q} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unknot_lifts_always_satisfy_the_congruence() {
        for p in 2..=20i64 {
            for q in 1..p {
                if p.gcd(&q) != 1 {
                    continue;
                }
                for n in 1..p {
                    if p.gcd(&n) != 1 {
                        continue;
                    }
                    if !lift_generator(p, q, n).unwrap().is_unknot() {
                        continue;
                    }
                    for m in maximal_prime_powers(p).unwrap() {
                        assert!(
                            theorem1_congruence(p, q, n, &m).unwrap(),
                            "unknot lift fails congruence at p={p} q={q} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn homeomorphic_lens_spaces_report_equal_admissible_linking_sets() {
        use crate::lens::LensSpace;
        use std::collections::BTreeSet;
        for p in 2..=30i64 {
            let qs: Vec<i64> = (1..p).filter(|q| p.gcd(q) == 1).collect();
            // linking values of classes whose report concludes a single branch
            let admissible_lk = |q: i64| -> BTreeSet<QmodZ> {
                (1..p)
                    .filter(|n| p.gcd(n) == 1)
                    .filter_map(|n| {
                        let report = obstruction_report(p, q, n).unwrap();
                        match report.global_conclusion {
                            GlobalConclusion::NSquaredIsOne
                            | GlobalConclusion::NSquaredIsQbarSquared => Some(report.linking_value),
                            _ => None,
                        }
                    })
                    .collect()
            };
            let sets: Vec<(i64, BTreeSet<QmodZ>)> =
                qs.iter().map(|&q| (q, admissible_lk(q))).collect();
            for (i, (q, set)) in sets.iter().enumerate() {
                // each set is exactly {q/p, qbar/p}
                let l = LensSpace::new(p, *q).unwrap();
                let expected: BTreeSet<QmodZ> = [QmodZ::new(*q, p), QmodZ::new(l.qbar(), p)]
                    .into_iter()
                    .collect();
                assert_eq!(set, &expected, "admissible set at p={p} q={q}");
                for (q2, set2) in sets.iter().skip(i + 1) {
                    let l2 = LensSpace::new(p, *q2).unwrap();
                    if l.homeomorphic(&l2) {
                        assert_eq!(set, set2, "p={p}: q={q} vs q'={q2}");
                    }
                }
            }
        }
    }

    fn spec(pattern: &str, r: i64, s: u32, q: i64) -> PeriodicSpec {
        PeriodicSpec::new(BraidWord::parse_line(pattern).unwrap(), modulus(r, s), q).unwrap()
    }

    #[test]
    fn lemma4_examples() {
        // unknot vs mirror T(2,5): both reduce to 1 mod (t^3 - 1, 3)
        assert!(lemma4_verify(&spec("n=2 1", 3, 1, 1), 0).unwrap());
        // trefoil vs mirror trefoil share the polynomial
        assert!(lemma4_verify(&spec("n=2 1", 3, 1, 0), 0).unwrap());
        // trefoil vs figure-eight mod (t^2 - 1, 2)
        assert!(lemma4_verify(&spec("1 2", 2, 1, 0), 0).unwrap());
    }

    #[test]
    fn lemma4_report_details() {
        let mut cache = DeltaCache::new();
        let report = lemma4_report(
            &spec("n=2 1", 3, 1, 1),
            0,
            TwistConvention::NegativeQ,
            &mut cache,
        )
        .unwrap();
        assert_eq!(report.base_delta, LaurentPoly::one());
        assert_eq!(
            report.changed_delta,
            "t^-2 - t^-1 + 1 - t + t^2".parse::<LaurentPoly>().unwrap()
        );
        assert!(report.base_residue.is_one());
        assert!(report.holds());
        let out_of_range = lemma4_report(
            &spec("n=2 1", 3, 1, 1),
            5,
            TwistConvention::NegativeQ,
            &mut cache,
        );
        assert!(out_of_range.is_err());
    }

    #[test]
    fn small_forward_sweep_is_clean() {
        let sweep = theorem1_forward_sweep(12);
        assert!(
            sweep.violations.is_empty(),
            "violations: {:?}",
            sweep.violations
        );
        assert_eq!(sweep.witness_ok, Some(true));
        assert!(sweep.triples > 0 && sweep.checks >= sweep.triples);
        assert!(sweep.passed());
    }

    #[test]
    fn small_sweep_below_witness_range() {
        let sweep = theorem1_forward_sweep(7);
        assert!(sweep.passed());
        assert_eq!(sweep.witness_ok, None);
    }

    #[test]
    fn random_specs_are_deterministic() {
        let a = lemma4_random_specs(42, 10);
        let b = lemma4_random_specs(42, 10);
        assert_eq!(a, b);
        assert_ne!(a, lemma4_random_specs(43, 10));
        for s in &a {
            assert!((2..=3).contains(&s.pattern().strands()));
            assert!((1..=6).contains(&s.pattern().len()));
            assert!((-2..=2).contains(&s.q()));
        }
    }

    #[test]
    fn small_lemma4_suite_is_clean() {
        let sweep = lemma4_random_suite(7, 20);
        assert!(sweep.passed(), "failures: {:?}", sweep.failures);
        assert!(sweep.checks > 0);
    }
}
