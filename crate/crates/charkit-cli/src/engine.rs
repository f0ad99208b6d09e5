//! Sweep-case generation and parallel evaluation.

use charkit::lie::{order2_element, Family, GroupId, HalfIntVector};
use charkit::oracle::{char_at, g2_char_curve, weyl_dim};
use charkit::order2::{
    g2_c2_spin_form, theta_g2_c2, theta_g2_curve_factored, theta_gl, theta_so_even, theta_so_odd,
    theta_sp, CaseTag, Order2Result,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::records::{rational_string, render_factors, sign_of, CaseRecord};

/// Deterministic 64-bit generator for the seeded sweeps; fixed constants,
/// stable output forever.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Deliberate corruptions for the mutation check of the verify sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Pretend the GL factorization constant were 2^(c+1).
    GlTwoPower,
}

impl Fault {
    pub fn parse(tag: &str) -> Result<Fault, String> {
        match tag {
            "gl-two-power" => Ok(Fault::GlTwoPower),
            _ => Err(format!("unknown fault tag {tag:?} (expected gl-two-power)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CaseSpec {
    pub family: Family,
    pub rank: usize,
    pub lambda_doubled: Vec<i64>,
    pub k: usize,
}

impl CaseSpec {
    pub fn lambda(&self) -> HalfIntVector {
        HalfIntVector::from_doubled(&self.lambda_doubled)
    }
}

pub fn legal_ks(family: Family, rank: usize) -> Vec<usize> {
    match family {
        Family::Gl | Family::Sp | Family::SoEven => (1..=rank / 2).collect(),
        Family::SoOdd => (1..rank).collect(),
        Family::G2 => vec![1],
    }
}

fn dominant_tuples(rank: usize, max_entry: i64) -> Vec<Vec<i64>> {
    fn rec(rank: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == rank {
            out.push(cur.clone());
            return;
        }
        let hi = cur.last().copied().unwrap_or(max);
        for v in (0..=hi).rev() {
            cur.push(v);
            rec(rank, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, max_entry, &mut Vec::new(), &mut out);
    out
}

pub struct SweepBounds {
    pub max_rank: usize,
    pub max_entry: i64,
    pub max_kl: u32,
    pub samples: usize,
    pub sample_max_entry: i64,
    pub seed: u64,
}

/// All sweep cases for the given families: exhaustive dominant weights up
/// to `max_entry`, plus `samples` seeded random weights per classical
/// family with entries up to `sample_max_entry`, each evaluated at every
/// legal k. G2 sweeps the (k, l) grid up to `max_kl`.
pub fn generate_cases(families: &[Family], bounds: &SweepBounds) -> Vec<CaseSpec> {
    let mut cases = Vec::new();
    for (fam_idx, &family) in families.iter().enumerate() {
        if family == Family::G2 {
            for k in 0..=bounds.max_kl {
                for l in 0..=bounds.max_kl {
                    cases.push(CaseSpec {
                        family,
                        rank: 2,
                        lambda_doubled: vec![2 * k as i64, 2 * l as i64],
                        k: 1,
                    });
                }
            }
            continue;
        }
        let ranks: Vec<usize> = (2..=bounds.max_rank).collect();
        if ranks.is_empty() {
            continue;
        }
        for &rank in &ranks {
            for tuple in dominant_tuples(rank, bounds.max_entry) {
                for k in legal_ks(family, rank) {
                    cases.push(CaseSpec {
                        family,
                        rank,
                        lambda_doubled: tuple.iter().map(|v| 2 * v).collect(),
                        k,
                    });
                }
            }
        }
        let mut rng = SplitMix64::new(
            bounds
                .seed
                .wrapping_add(0xA076_1D64_78BD_642F_u64.wrapping_mul(fam_idx as u64 + 1)),
        );
        for i in 0..bounds.samples {
            let rank = ranks[i % ranks.len()];
            let mut entries: Vec<i64> = (0..rank)
                .map(|_| rng.below(bounds.sample_max_entry as u64 + 1) as i64)
                .collect();
            entries.sort_unstable_by(|a, b| b.cmp(a));
            for k in legal_ks(family, rank) {
                cases.push(CaseSpec {
                    family,
                    rank,
                    lambda_doubled: entries.iter().map(|v| 2 * v).collect(),
                    k,
                });
            }
        }
    }
    cases.sort();
    cases.dedup();
    cases
}

fn closed_form(spec: &CaseSpec) -> Order2Result {
    let lam = spec.lambda();
    match spec.family {
        Family::Gl => theta_gl(spec.rank, &lam, spec.k),
        Family::Sp => theta_sp(spec.rank, &lam, spec.k),
        Family::SoEven => theta_so_even(spec.rank, &lam, spec.k),
        Family::SoOdd => theta_so_odd(spec.rank, &lam, spec.k),
        Family::G2 => unreachable!("G2 handled separately"),
    }
    .expect("sweep cases are legal inputs")
}

/// Evaluate one case: closed form against oracle for the classical
/// families, involution value against the Laurent-curve oracle (plus the
/// curve factorization identity and the half-spin-dimension identity) for
/// G2. The optional fault corrupts the closed value to prove the sweep
/// would catch a wrong constant.
pub fn evaluate_case(spec: &CaseSpec, fault: Option<Fault>) -> CaseRecord {
    if spec.family == Family::G2 {
        return evaluate_g2(spec);
    }
    let group = GroupId::new(spec.family, spec.rank);
    let lam = spec.lambda();
    let mut closed = closed_form(spec);
    if fault == Some(Fault::GlTwoPower)
        && spec.family == Family::Gl
        && closed.case == CaseTag::Factorization
    {
        closed.magnitude *= BigRational::from_integer(BigInt::from(2));
    }
    let oracle = char_at(group, &lam, &order2_element(group, spec.k).unwrap())
        .expect("oracle evaluates every sweep case");
    let matched =
        closed.magnitude == oracle.abs() && (closed.case != CaseTag::Vanishing || oracle.is_zero());
    CaseRecord {
        family: spec.family.as_str().to_string(),
        rank: spec.rank,
        lambda: lam.to_string(),
        k: spec.k,
        case: closed.case.as_str().to_string(),
        magnitude: rational_string(&closed.magnitude),
        oracle_value: rational_string(&oracle),
        matched,
        oracle_sign: sign_of(&oracle),
        factors: render_factors(&closed),
    }
}

fn evaluate_g2(spec: &CaseSpec) -> CaseRecord {
    let k = (spec.lambda_doubled[0] / 2) as u32;
    let l = (spec.lambda_doubled[1] / 2) as u32;
    let closed = theta_g2_c2(k, l);
    let curve = g2_char_curve(k, l).expect("curve quotient is exact");
    let oracle = BigRational::from_integer(curve.eval_at_one());
    let signed = closed
        .signed_value
        .clone()
        .expect("G2 values carry their sign");

    let mut matched = signed == oracle && theta_g2_curve_factored(k, l) == curve;
    match g2_c2_spin_form(k, l) {
        Ok((group, weight, sign)) => {
            let half_dim = BigRational::new(weyl_dim(group, &weight).unwrap(), BigInt::from(2));
            matched &= signed.abs() == half_dim && (sign < 0) == signed.is_negative();
        }
        Err(_) => matched &= signed.is_zero(),
    }

    CaseRecord {
        family: "g2".to_string(),
        rank: 2,
        lambda: format!("{},{}", k, l),
        k: 1,
        case: closed.case.as_str().to_string(),
        magnitude: rational_string(&closed.magnitude),
        oracle_value: rational_string(&oracle),
        matched,
        oracle_sign: sign_of(&oracle),
        factors: render_factors(&closed),
    }
}

/// Evaluate all cases, fanning out to `jobs` workers. Records come back in
/// the canonical case order regardless of scheduling.
pub fn run_cases(cases: &[CaseSpec], jobs: usize, fault: Option<Fault>) -> Vec<CaseRecord> {
    let jobs = jobs.max(1).min(cases.len().max(1));
    if jobs <= 1 {
        return cases.iter().map(|c| evaluate_case(c, fault)).collect();
    }
    let mut slots: Vec<Option<CaseRecord>> = vec![None; cases.len()];
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for _ in 0..jobs {
            let next = &next;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    if i >= cases.len() {
                        return out;
                    }
                    out.push((i, evaluate_case(&cases[i], fault)));
                }
            }));
        }
        for handle in handles {
            for (i, record) in handle.join().expect("worker panicked") {
                slots[i] = Some(record);
            }
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("every case evaluated"))
        .collect()
}
