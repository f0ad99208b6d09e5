//! Closed forms for character values at the order-2 elements.
//!
//! For each classical family the value at `(1,..,1,-1,..,-1)` is classified
//! by the parity split of `lambda + rho` into one of three shapes: it
//! vanishes outright, factors as a power of two times a product of two
//! smaller-group dimensions, or is an alternating sum of dimension products
//! over k-subsets of the shifted-weight entries. SO(2n+1) is special: the
//! value never has a vanishing criterion, the alternating sum runs over all
//! k-subsets, and the balanced case n = 2k is served by the oracle. G2's
//! involution class gets exact signed values and an SL2 x SL2 Laurent
//! factorization along the curve `(x, -x, -x^-2)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::detkit::{combinations, shuffle_sign, IndexSet};
use crate::laurent::LaurentPoly;
use crate::lie::{
    det_twist, eta_decompose, is_dominant, order2_element, require_dominant, rho, Family, GroupId,
    HalfInt, HalfIntVector,
};
use crate::oracle::{char_at, weyl_dim};
use crate::{Error, Result};

/// Which of the closed-form shapes applies. Determined entirely by the
/// group, rank, `#eta0` and `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    Vanishing,
    Factorization,
    AlternatingSum,
    /// SO(2n+1) with n = 2k: no closed form in scope; the value is taken
    /// from the oracle.
    OracleOnly,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Vanishing => "vanishing",
            CaseTag::Factorization => "factorization",
            CaseTag::AlternatingSum => "alternating_sum",
            CaseTag::OracleOnly => "oracle_only",
        }
    }
}

/// One dimension factor of a factorized value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub group: GroupId,
    pub weight: HalfIntVector,
    pub dim: BigInt,
}

/// One term of an alternating sum: the 1-based subset it came from, its
/// sign, and the product of the two factor dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltTerm {
    pub subset: IndexSet,
    pub sign: i8,
    pub dim_product: BigInt,
}

/// A character value at an order-2 element. The closed forms determine the
/// magnitude exactly but (outside the vanishing, oracle and G2 cases) only
/// determine the sign up to a global flip, so the signed value is carried
/// separately and only when actually known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order2Result {
    pub case: CaseTag,
    pub magnitude: BigRational,
    pub sign_known: bool,
    pub signed_value: Option<BigRational>,
    pub factors: Vec<Factor>,
    /// Exponent c of the constant 2^c in a factorization; may be negative.
    pub two_power: Option<i64>,
    /// Exponent of the power-of-two denominator of an alternating sum.
    pub denominator_power: Option<u64>,
    pub terms: Option<Vec<AltTerm>>,
}

fn two_pow(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::from(2).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(2).pow((-e) as u32))
    }
}

impl Order2Result {
    fn vanishing() -> Order2Result {
        Order2Result {
            case: CaseTag::Vanishing,
            magnitude: BigRational::zero(),
            sign_known: true,
            signed_value: Some(BigRational::zero()),
            factors: Vec::new(),
            two_power: None,
            denominator_power: None,
            terms: None,
        }
    }

    fn factorization(two_power: i64, factors: Vec<Factor>) -> Order2Result {
        let mut prod = BigInt::one();
        for f in &factors {
            prod *= &f.dim;
        }
        Order2Result {
            case: CaseTag::Factorization,
            magnitude: two_pow(two_power) * BigRational::from_integer(prod),
            sign_known: false,
            signed_value: None,
            factors,
            two_power: Some(two_power),
            denominator_power: None,
            terms: None,
        }
    }

    fn alternating(denominator_power: u64, terms: Vec<AltTerm>) -> Order2Result {
        let mut sum = BigInt::zero();
        for t in &terms {
            if t.sign > 0 {
                sum += &t.dim_product;
            } else {
                sum -= &t.dim_product;
            }
        }
        Order2Result {
            case: CaseTag::AlternatingSum,
            magnitude: BigRational::from_integer(sum.abs()) * two_pow(-(denominator_power as i64)),
            sign_known: false,
            signed_value: None,
            factors: Vec::new(),
            two_power: None,
            denominator_power: Some(denominator_power),
            terms: Some(terms),
        }
    }

    fn oracle_only(value: BigRational) -> Order2Result {
        Order2Result {
            case: CaseTag::OracleOnly,
            magnitude: value.abs(),
            sign_known: true,
            signed_value: Some(value),
            factors: Vec::new(),
            two_power: None,
            denominator_power: None,
            terms: None,
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check_k_half_rank(group: GroupId, k: usize) -> Result<()> {
    if k >= 1 && 2 * k <= group.rank {
        Ok(())
    } else {
        Err(Error::KOutOfRange {
            group: group.to_string(),
            k: k as i64,
        })
    }
}

/// Entries of eta halved: eta0/2 or eta1/2.
fn halved(values: &HalfIntVector) -> HalfIntVector {
    HalfIntVector::new(values.iter().map(|e| e.half()).collect())
}

/// (eta1 - 1)/2.
fn minus_one_halved(values: &HalfIntVector) -> HalfIntVector {
    let one = HalfInt::from_int(1);
    HalfIntVector::new(values.iter().map(|e| e.sub(&one).half()).collect())
}

/// Subtract the rho of `group` from an already-shifted vector and insist the
/// outcome is dominant; the closed forms only ever construct dominant
/// weights here, so failure is an internal error, not an input error.
fn weight_from_shifted(shifted: HalfIntVector, group: GroupId) -> HalfIntVector {
    let w = shifted.sub(&rho(group));
    assert!(
        is_dominant(group, &w),
        "constructed factor weight {} is not dominant for {}",
        w,
        group
    );
    w
}

fn factor(group: GroupId, weight: HalfIntVector) -> Result<Factor> {
    let dim = weyl_dim(group, &weight)?;
    Ok(Factor { group, weight, dim })
}

/// 1-based positions of `l` whose entries are odd.
fn odd_positions(l: &HalfIntVector) -> Vec<usize> {
    l.iter()
        .enumerate()
        .filter(|(_, e)| e.parity() == Some(1))
        .map(|(i, _)| i + 1)
        .collect()
}

fn values_at(l: &HalfIntVector, positions: &[usize]) -> HalfIntVector {
    HalfIntVector::new(positions.iter().map(|&p| l.get(p - 1).clone()).collect())
}

fn classical_case(family: Family, n: usize, k: usize, count0: usize) -> CaseTag {
    match family {
        Family::Gl => {
            // Callers normalize so that #eta0 >= #eta1 first.
            if count0 > n - k {
                CaseTag::Vanishing
            } else if count0 == n - k {
                CaseTag::Factorization
            } else {
                CaseTag::AlternatingSum
            }
        }
        Family::Sp | Family::SoEven => {
            let count1 = n - count0;
            if count0 > n - k || count1 > n - k {
                CaseTag::Vanishing
            } else if count0 == n - k || count0 == k {
                CaseTag::Factorization
            } else {
                CaseTag::AlternatingSum
            }
        }
        Family::SoOdd | Family::G2 => unreachable!("handled separately"),
    }
}

/// Classify which closed-form shape applies, without evaluating it.
pub fn classify(group: GroupId, lambda: &HalfIntVector, k: usize) -> Result<CaseTag> {
    match group.family {
        Family::Gl => {
            check_k_half_rank(group, k)?;
            let mut split = eta_decompose(group, lambda)?;
            if split.count0() < split.count1() {
                split = eta_decompose(group, &det_twist(lambda, 1))?;
            }
            Ok(classical_case(Family::Gl, group.rank, k, split.count0()))
        }
        Family::Sp | Family::SoEven => {
            check_k_half_rank(group, k)?;
            if group.family == Family::SoEven && !lambda.last_nonnegative() {
                return Err(Error::NegativeLastEntry);
            }
            let split = eta_decompose(group, lambda)?;
            Ok(classical_case(group.family, group.rank, k, split.count0()))
        }
        Family::SoOdd => {
            let n = group.rank;
            if !(k >= 1 && k < n) {
                return Err(Error::KOutOfRange {
                    group: group.to_string(),
                    k: k as i64,
                });
            }
            require_dominant(group, lambda)?;
            Ok(if n == 2 * k {
                CaseTag::OracleOnly
            } else {
                CaseTag::AlternatingSum
            })
        }
        Family::G2 => {
            if k != 1 {
                return Err(Error::KOutOfRange {
                    group: group.to_string(),
                    k: k as i64,
                });
            }
            require_dominant(group, lambda)?;
            let both_odd = lambda.iter().all(|e| e.parity() == Some(1));
            Ok(if both_odd {
                CaseTag::Vanishing
            } else {
                CaseTag::Factorization
            })
        }
    }
}

/// GL(n) at the element with k coordinates -1.
///
/// The weight is normalized first: when `#eta0 < #eta1` it is twisted by the
/// determinant character (m = 1), which flips every entry parity and changes
/// the character only by the global sign `(-1)^k`, leaving the magnitude
/// untouched.
pub fn theta_gl(n: usize, lambda: &HalfIntVector, k: usize) -> Result<Order2Result> {
    let group = GroupId::gl(n);
    check_k_half_rank(group, k)?;
    require_dominant(group, lambda)?;

    let mut lam = lambda.clone();
    let mut split = eta_decompose(group, &lam)?;
    if split.count0() < split.count1() {
        lam = det_twist(&lam, 1);
        split = eta_decompose(group, &lam)?;
    }
    let count0 = split.count0();

    match classical_case(Family::Gl, n, k, count0) {
        CaseTag::Vanishing => Ok(Order2Result::vanishing()),
        CaseTag::Factorization => {
            let lam0 = weight_from_shifted(halved(split.eta0()), GroupId::gl(n - k));
            let lam1 = weight_from_shifted(minus_one_halved(split.eta1()), GroupId::gl(k));
            let c = binom((n - 2 * k) as u64, 2) as i64;
            Ok(Order2Result::factorization(
                c,
                vec![
                    factor(GroupId::gl(n - k), lam0)?,
                    factor(GroupId::gl(k), lam1)?,
                ],
            ))
        }
        CaseTag::AlternatingSum => {
            let l = lam.add(&rho(group));
            let odd = odd_positions(&l);
            debug_assert_eq!(odd.len(), split.count1());
            let mut terms = Vec::new();
            for subset in combinations(&odd, k) {
                let s = IndexSet::new(subset);
                let eps = shuffle_sign(&s, n)?;
                let s_comp = s.complement(n);
                let lam_s = weight_from_shifted(values_at(&l, s.indices()), GroupId::gl(k));
                let lam_sc =
                    weight_from_shifted(values_at(&l, s_comp.indices()), GroupId::gl(n - k));
                let dim_product =
                    weyl_dim(GroupId::gl(k), &lam_s)? * weyl_dim(GroupId::gl(n - k), &lam_sc)?;
                terms.push(AltTerm {
                    subset: s,
                    sign: eps,
                    dim_product,
                });
            }
            Ok(Order2Result::alternating((k * (n - k - 1)) as u64, terms))
        }
        CaseTag::OracleOnly => unreachable!(),
    }
}

/// Sp(2n) at the element whose first-block coordinates have k entries -1.
pub fn theta_sp(n: usize, lambda: &HalfIntVector, k: usize) -> Result<Order2Result> {
    let group = GroupId::sp(n);
    check_k_half_rank(group, k)?;
    require_dominant(group, lambda)?;
    let split = eta_decompose(group, lambda)?;
    let count0 = split.count0();

    match classical_case(Family::Sp, n, k, count0) {
        CaseTag::Vanishing => Ok(Order2Result::vanishing()),
        CaseTag::Factorization => {
            // The two readings carry different powers of two: (n-2k)^2 when
            // eta0 fills the large block, 2*C(n-2k,2) when it fills the
            // small one. They agree (both zero) in the overlap n = 2k.
            // Pinned against the oracle sweep.
            let m = (n as i64) - 2 * k as i64;
            let d = if count0 == n - k { m * m } else { m * (m - 1) };
            let (sp_rank, so_rank) = if count0 == n - k {
                (n - k, k)
            } else {
                (k, n - k)
            };
            let lam0 = weight_from_shifted(halved(split.eta0()), GroupId::sp(sp_rank));
            let lam1 = weight_from_shifted(halved(split.eta1()), GroupId::so_odd(so_rank));
            Ok(Order2Result::factorization(
                d,
                vec![
                    factor(GroupId::sp(sp_rank), lam0)?,
                    factor(GroupId::so_odd(so_rank), lam1)?,
                ],
            ))
        }
        CaseTag::AlternatingSum => {
            let l = lambda.add(&rho(group));
            let odd = odd_positions(&l);
            let mut terms = Vec::new();
            for subset in combinations(&odd, k) {
                let s = IndexSet::new(subset);
                let eps = shuffle_sign(&s, n)?;
                let s_comp = s.complement(n);
                let lam_s = weight_from_shifted(values_at(&l, s.indices()), GroupId::sp(k));
                let lam_sc =
                    weight_from_shifted(values_at(&l, s_comp.indices()), GroupId::sp(n - k));
                let dim_product =
                    weyl_dim(GroupId::sp(k), &lam_s)? * weyl_dim(GroupId::sp(n - k), &lam_sc)?;
                terms.push(AltTerm {
                    subset: s,
                    sign: eps,
                    dim_product,
                });
            }
            Ok(Order2Result::alternating(
                (k * (2 * n - 2 * k - 1)) as u64,
                terms,
            ))
        }
        CaseTag::OracleOnly => unreachable!(),
    }
}

/// SO(2n) at the element whose first-block coordinates have k entries -1.
/// Restricted to lambda_n >= 0; the two-power e(k) can be negative, yet the
/// magnitude is always an integer.
pub fn theta_so_even(n: usize, lambda: &HalfIntVector, k: usize) -> Result<Order2Result> {
    let group = GroupId::so_even(n);
    check_k_half_rank(group, k)?;
    if !lambda.last_nonnegative() {
        return Err(Error::NegativeLastEntry);
    }
    require_dominant(group, lambda)?;
    let split = eta_decompose(group, lambda)?;
    let count0 = split.count0();

    match classical_case(Family::SoEven, n, k, count0) {
        CaseTag::Vanishing => Ok(Order2Result::vanishing()),
        CaseTag::Factorization => {
            let e = 2 * binom((n - 2 * k) as u64, 2) as i64 - k as i64 + 1;
            // eta1 entries are odd, so the eta1 side is the spin factor.
            let (rank0, rank1) = if count0 == n - k {
                (n - k, k)
            } else {
                (k, n - k)
            };
            let lam0 = weight_from_shifted(halved(split.eta0()), GroupId::so_even(rank0));
            let lam1 = weight_from_shifted(halved(split.eta1()), GroupId::so_even(rank1));
            Ok(Order2Result::factorization(
                e,
                vec![
                    factor(GroupId::so_even(rank0), lam0)?,
                    factor(GroupId::so_even(rank1), lam1)?,
                ],
            ))
        }
        CaseTag::AlternatingSum => {
            // Reached only when k < #eta0 < n-k, which forces n-k > k.
            assert!(n - k > k);
            let l = lambda.add(&rho(group));
            let odd = odd_positions(&l);
            let mut terms = Vec::new();
            for subset in combinations(&odd, k) {
                let s = IndexSet::new(subset);
                let eps = shuffle_sign(&s, n)?;
                let s_comp = s.complement(n);
                let lam_s = weight_from_shifted(values_at(&l, s.indices()), GroupId::so_even(k));
                let lam_sc =
                    weight_from_shifted(values_at(&l, s_comp.indices()), GroupId::so_even(n - k));
                let dim_product = weyl_dim(GroupId::so_even(k), &lam_s)?
                    * weyl_dim(GroupId::so_even(n - k), &lam_sc)?;
                terms.push(AltTerm {
                    subset: s,
                    sign: eps,
                    dim_product,
                });
            }
            // One power of two less than the symplectic case: the even
            // orthogonal numerator is a sum of two determinants whose
            // limits contribute equally here. Pinned against the oracle
            // for k = 1, 2, 3 (the k(2n-2k-1) exponent alone is off by a
            // constant factor 2 for every k).
            Ok(Order2Result::alternating(
                (k * (2 * n - 2 * k - 1)) as u64 - 1,
                terms,
            ))
        }
        CaseTag::OracleOnly => unreachable!(),
    }
}

/// SO(2n+1) at the element with k entries -1 in the first block: the
/// alternating-sum closed form, defined for n != 2k. Unlike the other
/// families the subsets run over all of [n] and each term carries, besides
/// the shuffle sign, the parity phase `(-1)^{sum of l_u over u in L}` that
/// the -1-block rows contribute to the numerator determinant.
pub fn theta_so_odd_b(n: usize, lambda: &HalfIntVector, k: usize) -> Result<Order2Result> {
    let group = GroupId::so_odd(n);
    if !(k >= 1 && k < n) {
        return Err(Error::KOutOfRange {
            group: group.to_string(),
            k: k as i64,
        });
    }
    if n == 2 * k {
        return Err(Error::NEquals2K);
    }
    require_dominant(group, lambda)?;
    if !lambda.all_integer() {
        return Err(Error::NonIntegerEntries);
    }

    // The shifted entries here use the GL-style rho (n-1, ..., 0); the
    // half-unit shift below then lands the L-side on spin weights.
    let l = lambda.add(&rho(GroupId::gl(n)));
    let half = HalfInt::from_doubled(1);
    let all: Vec<usize> = (1..=n).collect();
    let mut terms = Vec::new();
    for subset in combinations(&all, k) {
        let s = IndexSet::new(subset);
        let eps = shuffle_sign(&s, n)?;
        let mut phase = 0u8;
        for &u in s.indices() {
            phase ^= l.get(u - 1).parity().expect("integral shifted entries");
        }
        let sign = if phase == 1 { -eps } else { eps };
        let s_comp = s.complement(n);
        let lam_l = weight_from_shifted(
            values_at(&l, s.indices()).add_constant(&half),
            GroupId::so_even(k),
        );
        let lam_lc = weight_from_shifted(
            values_at(&l, s_comp.indices()).add_constant(&half),
            GroupId::so_odd(n - k),
        );
        let dim_product =
            weyl_dim(GroupId::so_even(k), &lam_l)? * weyl_dim(GroupId::so_odd(n - k), &lam_lc)?;
        terms.push(AltTerm {
            subset: s,
            sign,
            dim_product,
        });
    }
    let power = 2 * (k as u64) * (n as u64) - 2 * (k as u64).pow(2) + k as u64 - 1;
    Ok(Order2Result::alternating(power, terms))
}

/// SO(2n+1) at the order-2 element: the closed form when n != 2k, and the
/// oracle's exact signed value (tagged `OracleOnly`) when n = 2k.
pub fn theta_so_odd(n: usize, lambda: &HalfIntVector, k: usize) -> Result<Order2Result> {
    let group = GroupId::so_odd(n);
    if n == 2 * k {
        if !(k >= 1 && k < n) {
            return Err(Error::KOutOfRange {
                group: group.to_string(),
                k: k as i64,
            });
        }
        require_dominant(group, lambda)?;
        if !lambda.all_integer() {
            return Err(Error::NonIntegerEntries);
        }
        let value = char_at(group, lambda, &order2_element(group, k)?)?;
        return Ok(Order2Result::oracle_only(value));
    }
    theta_so_odd_b(n, lambda, k)
}

/// The sign and SO(4) spin weight whose half-dimension gives the G2 value
/// at the involution class. Undefined (`BothOdd`) when the value is 0.
pub fn g2_c2_spin_form(k: u32, l: u32) -> Result<(GroupId, HalfIntVector, i8)> {
    let (k, l) = (k as i64, l as i64);
    let (sign, doubled) = match (k % 2, l % 2) {
        (1, 1) => return Err(Error::BothOdd),
        (0, 0) => (1, [k + 2 * l + 1, l + 1]),
        (1, 0) => (-1, [k + l, l + 1]),
        (0, 1) => (-1, [k + 2 * l + 1, k + l + 2]),
        _ => unreachable!(),
    };
    Ok((
        GroupId::so_even(2),
        HalfIntVector::from_doubled(&doubled),
        sign,
    ))
}

/// The exact signed G2 character value at the involution class.
pub fn theta_g2_c2(k: u32, l: u32) -> Order2Result {
    let (ki, li) = (k as i64, l as i64);
    if k % 2 == 1 && l % 2 == 1 {
        return Order2Result::vanishing();
    }
    let numerator = match (k % 2, l % 2) {
        (0, 0) => BigInt::from((ki + li + 2) * (3 * li + ki + 4)),
        (1, 0) => -BigInt::from((ki + 1) * (ki + 2 * li + 3)),
        (0, 1) => -BigInt::from((li + 1) * (3 * li + 2 * ki + 5)),
        _ => unreachable!(),
    };
    let (q, r) = num_integer::Integer::div_rem(&numerator, &BigInt::from(8));
    assert!(r.is_zero(), "G2 involution values are integers");
    let value = BigRational::from_integer(q);

    let (group, weight, sign) = g2_c2_spin_form(k, l).expect("not both odd");
    let f = factor(group, weight).expect("SO(4) spin weight is dominant");
    let mut result = Order2Result::factorization(-1, vec![f]);
    debug_assert_eq!(result.magnitude, value.abs());
    debug_assert_eq!(sign > 0, value.is_positive() || value.is_zero());
    result.sign_known = true;
    result.signed_value = Some(value);
    result
}

/// One parity case of the G2 curve factorization: the sign and the two SL2
/// highest weights (as formulas in k and l), the first evaluated at
/// `(x^2, x^-2)` and the second at `(x^3, x^-3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct G2CurveCase {
    pub k_parity: u8,
    pub l_parity: u8,
    pub sign: i8,
    pub weight_in_x2: Option<&'static str>,
    pub weight_in_x3: Option<&'static str>,
}

/// The parity-to-factor assignment used by [`theta_g2_curve_factored`],
/// derived by requiring coefficient-level identity with [`g2_char_curve`]
/// (`crate::oracle::g2_char_curve`) and consistency with [`theta_g2_c2`]
/// at x = 1.
pub fn g2_curve_case_table() -> [G2CurveCase; 4] {
    [
        G2CurveCase {
            k_parity: 1,
            l_parity: 1,
            sign: 0,
            weight_in_x2: None,
            weight_in_x3: None,
        },
        G2CurveCase {
            k_parity: 0,
            l_parity: 1,
            sign: -1,
            weight_in_x2: Some("(2k+3l+1)/4"),
            weight_in_x3: Some("(l-1)/2"),
        },
        G2CurveCase {
            k_parity: 1,
            l_parity: 0,
            sign: -1,
            weight_in_x2: Some("(k-3)/4"),
            weight_in_x3: Some("(k+2l+1)/2"),
        },
        G2CurveCase {
            k_parity: 0,
            l_parity: 0,
            sign: 1,
            weight_in_x2: Some("(k+3l)/4"),
            weight_in_x3: Some("(k+l)/2"),
        },
    ]
}

/// The G2 character along `(x, -x, -x^-2)` as a signed product of two SL2
/// characters, assembled from the case table. The individual SL2 factors
/// can have fractional highest weights; only the product is a Laurent
/// polynomial, so the pair is evaluated as one exact quotient.
pub fn theta_g2_curve_factored(k: u32, l: u32) -> LaurentPoly {
    let (ki, li) = (k as i64, l as i64);
    // Exponents u, v of the combined numerator (x^u - x^-u)(x^v - x^-v):
    // u = 2*(m2 + 1) and v = 3*(m3 + 1) for SL2 weights m2, m3 from the
    // case table evaluated at (x^2, x^-2) and (x^3, x^-3).
    let (sign, u, v) = match (k % 2, l % 2) {
        (1, 1) => return LaurentPoly::zero(),
        (0, 1) => (-1, (2 * ki + 3 * li + 5) / 2, 3 * (li + 1) / 2),
        (1, 0) => (-1, (ki + 1) / 2, 3 * (ki + 2 * li + 3) / 2),
        (0, 0) => (1, (ki + 3 * li + 4) / 2, 3 * (ki + li + 2) / 2),
        _ => unreachable!(),
    };
    debug_assert!(u > 0 && v > 0);
    let num = LaurentPoly::from_terms(&[(u, 1), (-u, -1)])
        .mul(&LaurentPoly::from_terms(&[(v, 1), (-v, -1)]));
    let den = LaurentPoly::from_terms(&[(2, 1), (-2, -1)])
        .mul(&LaurentPoly::from_terms(&[(3, 1), (-3, -1)]));
    let q = num
        .div_exact(&den)
        .expect("SL2-pair numerator divides exactly");
    if sign < 0 {
        q.neg()
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::TorusPoint;
    use crate::oracle::g2_char_curve;

    fn v(entries: &[i64]) -> HalfIntVector {
        HalfIntVector::from_ints(entries)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn oracle(group: GroupId, lambda: &HalfIntVector, k: usize) -> BigRational {
        char_at(group, lambda, &order2_element(group, k).unwrap()).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(GroupId::gl(2), &v(&[1, 1]), 1).unwrap(),
            CaseTag::Factorization
        );
        assert_eq!(
            classify(GroupId::sp(4), &v(&[2, 1, 1, 1]), 2).unwrap(),
            CaseTag::Vanishing
        );
        assert_eq!(
            classify(GroupId::sp(2), &v(&[1, 0]), 1).unwrap(),
            CaseTag::Vanishing
        );
        assert_eq!(
            classify(GroupId::so_odd(4), &v(&[1, 0, 0, 0]), 2).unwrap(),
            CaseTag::OracleOnly
        );
        assert_eq!(
            classify(GroupId::so_odd(4), &v(&[1, 0, 0, 0]), 1).unwrap(),
            CaseTag::AlternatingSum
        );
        assert!(matches!(
            classify(GroupId::gl(4), &v(&[1, 0, 0, 0]), 3),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn classify_g2() {
        assert_eq!(
            classify(GroupId::g2(), &v(&[1, 1]), 1).unwrap(),
            CaseTag::Vanishing
        );
        assert_eq!(
            classify(GroupId::g2(), &v(&[2, 0]), 1).unwrap(),
            CaseTag::Factorization
        );
        assert_eq!(
            classify(GroupId::g2(), &v(&[0, 0]), 1).unwrap(),
            CaseTag::Factorization
        );
        assert!(matches!(
            classify(GroupId::g2(), &v(&[1, 1]), 2),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn theta_gl_accepts_negative_entries() {
        // Dual of the standard representation: trace 0 at diag(1,-1).
        let r = theta_gl(2, &v(&[0, -1]), 1).unwrap();
        assert_eq!(r.case, CaseTag::Vanishing);
        assert_eq!(oracle(GroupId::gl(2), &v(&[0, -1]), 1), rat(0));
        // Twist down by the determinant squared: magnitude is unchanged.
        let r = theta_gl(4, &v(&[0, 0, -2, -2]), 2).unwrap();
        assert_eq!(r.magnitude, rat(4));
        assert_eq!(oracle(GroupId::gl(4), &v(&[0, 0, -2, -2]), 2).abs(), rat(4));
    }

    #[test]
    fn theta_gl_examples() {
        // Determinant character of GL(2) at diag(1,-1): value -1.
        let r = theta_gl(2, &v(&[1, 1]), 1).unwrap();
        assert_eq!(r.case, CaseTag::Factorization);
        assert_eq!(r.magnitude, rat(1));
        assert_eq!(oracle(GroupId::gl(2), &v(&[1, 1]), 1), rat(-1));

        let r = theta_gl(2, &v(&[1, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::Vanishing);
        assert_eq!(r.signed_value, Some(rat(0)));

        // c(2) = 0, both factors the standard GL(2) representation.
        let r = theta_gl(4, &v(&[2, 2, 0, 0]), 2).unwrap();
        assert_eq!(r.case, CaseTag::Factorization);
        assert_eq!(r.two_power, Some(0));
        assert_eq!(r.magnitude, rat(4));
        assert_eq!(oracle(GroupId::gl(4), &v(&[2, 2, 0, 0]), 2).abs(), rat(4));
    }

    #[test]
    fn theta_gl_alternating_case() {
        // GL(4), lambda = (2,1,1,0): l = (5,3,2,0), two odd entries.
        let r = theta_gl(4, &v(&[2, 1, 1, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::AlternatingSum);
        assert_eq!(r.terms.as_ref().unwrap().len(), 2);
        assert_eq!(r.denominator_power, Some(2));
        assert_eq!(r.magnitude, rat(3));
        assert_eq!(oracle(GroupId::gl(4), &v(&[2, 1, 1, 0]), 1), rat(-3));
    }

    #[test]
    fn theta_sp_examples() {
        let r = theta_sp(2, &v(&[1, 1]), 1).unwrap();
        assert_eq!(r.case, CaseTag::Factorization);
        assert_eq!(r.two_power, Some(0));
        assert_eq!(r.magnitude, rat(3));
        assert_eq!(oracle(GroupId::sp(2), &v(&[1, 1]), 1), rat(-3));

        assert_eq!(theta_sp(2, &v(&[1, 0]), 1).unwrap().magnitude, rat(0));
        assert_eq!(
            theta_sp(4, &v(&[2, 1, 1, 1]), 2).unwrap().case,
            CaseTag::Vanishing
        );
        assert_eq!(oracle(GroupId::sp(4), &v(&[2, 1, 1, 1]), 2), rat(0));
    }

    #[test]
    fn theta_so_even_examples() {
        // Trivial representation: e(2) = -1 and the spin factor has dim 2.
        let r = theta_so_even(4, &v(&[0, 0, 0, 0]), 2).unwrap();
        assert_eq!(r.case, CaseTag::Factorization);
        assert_eq!(r.two_power, Some(-1));
        assert_eq!(r.magnitude, rat(1));

        let r = theta_so_even(4, &v(&[1, 0, 0, 0]), 2).unwrap();
        assert_eq!(r.case, CaseTag::Vanishing);
        assert_eq!(oracle(GroupId::so_even(4), &v(&[1, 0, 0, 0]), 2), rat(0));

        let r = theta_so_even(4, &v(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(r.magnitude, rat(3));
        assert_eq!(
            oracle(GroupId::so_even(4), &v(&[1, 1, 1, 1]), 2).abs(),
            rat(3)
        );

        assert!(matches!(
            theta_so_even(4, &HalfIntVector::from_ints(&[1, 1, 1, -1]), 2),
            Err(Error::NegativeLastEntry)
        ));
    }

    #[test]
    fn theta_so_odd_examples() {
        // n = 2k routes to the oracle.
        let r = theta_so_odd(2, &v(&[0, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::OracleOnly);
        assert_eq!(r.magnitude, rat(1));
        assert_eq!(r.signed_value, Some(rat(1)));

        let r = theta_so_odd(2, &v(&[1, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::OracleOnly);
        assert_eq!(r.magnitude, rat(1));

        assert_eq!(theta_so_odd_b(2, &v(&[1, 0]), 1), Err(Error::NEquals2K));

        // The rank-4 balanced case against the GL(4) dimension.
        let lam = v(&[2, 1, 1, 1]);
        let r = theta_so_odd(4, &lam, 2).unwrap();
        assert_eq!(r.case, CaseTag::OracleOnly);
        let lam1 = v(&[0, 0, 0, -1]); // ((l1+4)/2,(l2+3)/2,(l4+1)/2,(-l3-1)/2) - rho_4
        assert_eq!(
            r.magnitude,
            BigRational::from_integer(weyl_dim(GroupId::gl(4), &lam1).unwrap())
        );
        assert_eq!(r.magnitude, rat(4));
    }

    #[test]
    fn theta_so_odd_closed_form_matches_oracle_on_small_cases() {
        // n = 3, k = 1: the 7-dimensional standard trace at (1,-1,1) blocks.
        let r = theta_so_odd(3, &v(&[1, 0, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::AlternatingSum);
        assert_eq!(r.terms.as_ref().unwrap().len(), 3);
        assert_eq!(r.magnitude, rat(3));
        assert_eq!(oracle(GroupId::so_odd(3), &v(&[1, 0, 0]), 1), rat(3));

        let r = theta_so_odd(3, &v(&[1, 1, 0]), 2).unwrap();
        assert_eq!(
            r.magnitude,
            oracle(GroupId::so_odd(3), &v(&[1, 1, 0]), 2).abs()
        );
    }

    #[test]
    fn theta_g2_examples() {
        assert_eq!(theta_g2_c2(0, 0).signed_value, Some(rat(1)));
        assert_eq!(theta_g2_c2(1, 0).signed_value, Some(rat(-1)));
        assert_eq!(theta_g2_c2(0, 1).signed_value, Some(rat(-2)));
        let r = theta_g2_c2(1, 1);
        assert_eq!(r.case, CaseTag::Vanishing);
        assert_eq!(r.signed_value, Some(rat(0)));
    }

    #[test]
    fn g2_spin_form_examples() {
        let (g, w, _sign) = g2_c2_spin_form(0, 0).unwrap();
        assert_eq!(g, GroupId::so_even(2));
        assert_eq!(w, HalfIntVector::from_doubled(&[1, 1]));
        assert_eq!(weyl_dim(g, &w).unwrap(), BigInt::from(2));

        let (_, w, sign) = g2_c2_spin_form(1, 0).unwrap();
        assert_eq!(w, HalfIntVector::from_doubled(&[1, 1]));
        assert_eq!(sign, -1);

        let (_, w, sign) = g2_c2_spin_form(0, 1).unwrap();
        assert_eq!(w, HalfIntVector::from_doubled(&[3, 3]));
        assert_eq!(sign, -1);
        assert_eq!(weyl_dim(GroupId::so_even(2), &w).unwrap(), BigInt::from(4));

        assert_eq!(g2_c2_spin_form(1, 1), Err(Error::BothOdd));
    }

    #[test]
    fn g2_curve_factored_examples() {
        assert!(theta_g2_curve_factored(1, 1).is_zero());
        assert_eq!(theta_g2_curve_factored(0, 0).eval_at_one(), BigInt::one());
        assert_eq!(theta_g2_curve_factored(2, 1), g2_char_curve(2, 1).unwrap());
        assert_eq!(theta_g2_curve_factored(1, 0), g2_char_curve(1, 0).unwrap());
    }

    #[test]
    fn sp_mirror_branch_two_power() {
        // The small-block factorization reading carries 2*C(n-2k,2), not
        // (n-2k)^2; frozen from oracle-verified values.
        let r = theta_sp(3, &v(&[1, 1, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::Factorization);
        assert_eq!(r.two_power, Some(0));
        assert_eq!(r.magnitude, rat(2));

        let r = theta_sp(6, &v(&[4, 4, 3, 2, 1, 0]), 1).unwrap();
        assert_eq!(r.two_power, Some(12));
        assert_eq!(r.magnitude, rat(20480));

        // Large-block reading keeps the square.
        let r = theta_sp(3, &v(&[1, 0, 0]), 1).unwrap();
        assert_eq!(r.two_power, Some(1));
        assert_eq!(r.magnitude, rat(2));
    }

    #[test]
    fn so_even_alternating_denominator_power() {
        // One power of two below the symplectic shape; frozen from
        // oracle-verified values at k = 1 and k = 2.
        let r = theta_so_even(4, &v(&[0, 0, 0, 0]), 1).unwrap();
        assert_eq!(r.case, CaseTag::AlternatingSum);
        assert_eq!(r.denominator_power, Some(4));
        assert_eq!(r.magnitude, rat(1));

        let r = theta_so_even(7, &v(&[1, 1, 1, 1, 1, 1, 1]), 2).unwrap();
        assert_eq!(r.denominator_power, Some(17));
        assert_eq!(r.magnitude, rat(36));
    }

    #[test]
    fn alternating_terms_match_magnitude_invariant() {
        let r = theta_gl(4, &v(&[2, 1, 1, 0]), 1).unwrap();
        let mut sum = BigInt::zero();
        for t in r.terms.as_ref().unwrap() {
            if t.sign > 0 {
                sum += &t.dim_product;
            } else {
                sum -= &t.dim_product;
            }
        }
        let expected = BigRational::from_integer(sum.abs())
            / BigRational::from_integer(BigInt::from(2).pow(r.denominator_power.unwrap() as u32));
        assert_eq!(r.magnitude, expected);
    }

    #[test]
    fn det_twist_preserves_gl_magnitude() {
        for (lam, k) in [
            (v(&[1, 0, 0]), 1),
            (v(&[2, 1, 1, 0]), 1),
            (v(&[2, 2, 0, 0]), 2),
        ] {
            let a = theta_gl(lam.len(), &lam, k).unwrap();
            let b = theta_gl(lam.len(), &det_twist(&lam, 1), k).unwrap();
            assert_eq!(a.magnitude, b.magnitude, "lambda {} k {}", lam, k);
        }
    }

    #[test]
    fn sp_overlap_branches_agree_when_n_is_2k() {
        // n = 2k makes #eta0 = k = n-k hit both factorization readings;
        // they assign the same ranks, so the magnitudes must coincide.
        let lam = v(&[2, 2]);
        let r = theta_sp(2, &lam, 1).unwrap();
        let split = eta_decompose(GroupId::sp(2), &lam).unwrap();
        assert_eq!(split.count0(), 1);
        let lam0 = weight_from_shifted(halved(split.eta0()), GroupId::sp(1));
        let lam1 = weight_from_shifted(halved(split.eta1()), GroupId::so_odd(1));
        let mirror = Order2Result::factorization(
            0,
            vec![
                factor(GroupId::sp(1), lam0).unwrap(),
                factor(GroupId::so_odd(1), lam1).unwrap(),
            ],
        );
        assert_eq!(r.magnitude, mirror.magnitude);
        assert_eq!(r.magnitude, oracle(GroupId::sp(2), &lam, 1).abs());
    }

    #[test]
    fn order2_point_squares_to_identity() {
        for (group, k) in [
            (GroupId::gl(5), 2),
            (GroupId::sp(3), 1),
            (GroupId::so_odd(4), 3),
        ] {
            let t = order2_element(group, k).unwrap();
            let squared: Vec<BigRational> = t.coords().iter().map(|c| c * c).collect();
            assert_eq!(
                TorusPoint::new(squared).unwrap(),
                TorusPoint::identity(group.rank)
            );
            assert_eq!(
                t.coords()
                    .iter()
                    .filter(|c| c < &&BigRational::zero())
                    .count(),
                k
            );
        }
    }
}
