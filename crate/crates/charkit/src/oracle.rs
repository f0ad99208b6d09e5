//! Ground-truth character evaluation, independent of the closed forms.
//!
//! The classical-family route is Freudenthal's multiplicity recursion
//! followed by Weyl-orbit summation of torus monomials; it works at any
//! torus point, in particular at the singular order-2 elements where the
//! Weyl quotient degenerates to 0/0. GL gets a second route through the
//! Jacobi–Trudi determinant in complete homogeneous evaluations. G2 ground
//! truth is the Schur-polynomial quotient along the curve `(x,-x,-x^-2)`,
//! carried out in exact Laurent arithmetic.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::{rational_pow, LaurentPoly};
use crate::lie::{require_dominant, rho, Family, GroupId, HalfIntVector, TorusPoint};
use crate::{Error, Result};

/// How the Weyl group acts on torus coordinates, for orbit enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylOrbitKind {
    Permutations,
    SignedPermutations,
    EvenSignedPermutations,
    /// G2 orbits are never enumerated here; its ground truth goes through
    /// [`g2_char_curve`].
    G2,
}

/// Positive roots in coordinates, plus the orbit descriptor.
///
/// For the classical families these are the standard `e_i - e_j` style
/// vectors. For G2 the six vectors are the coroot pairings expressed in the
/// fundamental-weight basis, which is all the dimension formula needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub group: GroupId,
    pub positive_roots: Vec<Vec<i64>>,
    pub weyl_group_descriptor: WeylOrbitKind,
}

pub fn positive_roots(group: GroupId) -> RootSystemData {
    let n = group.rank;
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let unit = |i: usize, j: usize, si: i64, sj: i64| {
        let mut v = vec![0i64; n];
        v[i] += si;
        v[j] += sj;
        v
    };
    let descriptor = match group.family {
        Family::Gl => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(unit(i, j, 1, -1));
                }
            }
            WeylOrbitKind::Permutations
        }
        Family::Sp => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(unit(i, j, 1, -1));
                    roots.push(unit(i, j, 1, 1));
                }
            }
            for i in 0..n {
                roots.push(unit(i, i, 1, 1)); // 2 e_i
            }
            WeylOrbitKind::SignedPermutations
        }
        Family::SoOdd => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(unit(i, j, 1, -1));
                    roots.push(unit(i, j, 1, 1));
                }
            }
            for i in 0..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                roots.push(v);
            }
            WeylOrbitKind::SignedPermutations
        }
        Family::SoEven => {
            for i in 0..n {
                for j in i + 1..n {
                    roots.push(unit(i, j, 1, -1));
                    roots.push(unit(i, j, 1, 1));
                }
            }
            WeylOrbitKind::EvenSignedPermutations
        }
        Family::G2 => {
            roots = vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
            ];
            WeylOrbitKind::G2
        }
    };
    RootSystemData {
        group,
        positive_roots: roots,
        weyl_group_descriptor: descriptor,
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add_scaled(a: &[i64], b: &[i64], c: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

/// The Weyl dimension formula: the product over positive roots of
/// `<lambda+rho, alpha> / <rho, alpha>`, evaluated exactly.
pub fn weyl_dim(group: GroupId, lambda: &HalfIntVector) -> Result<BigInt> {
    require_dominant(group, lambda)?;
    let roots = positive_roots(group).positive_roots;
    let lam_d = lambda.to_doubled_i64();
    let rho_d = rho(group).to_doubled_i64();
    let lam_rho: Vec<i64> = lam_d.iter().zip(&rho_d).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &roots {
        num *= BigInt::from(dot(&lam_rho, alpha));
        den *= BigInt::from(dot(&rho_d, alpha));
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension product must divide exactly");
    assert!(q.is_positive(), "dimension must be positive");
    Ok(q)
}

/// Weight multiplicities of the irreducible representation of highest
/// weight `lambda`, indexed by dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub group: GroupId,
    pub lambda: HalfIntVector,
    entries: Vec<(HalfIntVector, BigInt)>,
    index: HashMap<Vec<i64>, usize>,
}

impl MultiplicityTable {
    pub fn multiplicity(&self, mu: &HalfIntVector) -> BigInt {
        self.index
            .get(&mu.to_doubled_i64())
            .map(|&i| self.entries[i].1.clone())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(HalfIntVector, BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Canonical dominant representative of a weight under the Weyl group.
fn dominant_form(family: Family, v: &[i64]) -> Vec<i64> {
    let mut w: Vec<i64> = match family {
        Family::Gl => v.to_vec(),
        Family::Sp | Family::SoOdd => v.iter().map(|x| x.abs()).collect(),
        Family::SoEven => {
            let negatives = v.iter().filter(|x| x.is_negative()).count();
            let mut a: Vec<i64> = v.iter().map(|x| x.abs()).collect();
            a.sort_unstable_by(|x, y| y.cmp(x));
            if negatives % 2 == 1 {
                if let Some(last) = a.last_mut() {
                    if *last != 0 {
                        *last = -*last;
                    }
                }
            }
            return a;
        }
        Family::G2 => unreachable!("no weight bookkeeping for G2"),
    };
    w.sort_unstable_by(|x, y| y.cmp(x));
    w
}

/// Dominant weights `mu <= lambda` (lattice condition plus the partial-sum
/// inequalities of the family). Doubled coordinates throughout.
fn dominant_weights_below(family: Family, lam_d: &[i64]) -> Vec<Vec<i64>> {
    let n = lam_d.len();
    let lam_prefix: Vec<i64> = lam_d
        .iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut walker = DominantWalker {
        family,
        n,
        total: lam_prefix[n - 1],
        lam_prefix,
        parity: ((lam_d[0] % 2) + 2) % 2,
        out: Vec::new(),
    };
    walker.walk(&mut Vec::with_capacity(n), 0, lam_d[0]);
    let mut out = walker.out;
    // The recursion braces the last slot with the previous entry's bound,
    // but the SO(2n) mirror sign needs |mu_n| <= mu_{n-1}; enforce.
    if family == Family::SoEven && n >= 2 {
        out.retain(|m| m[n - 2] >= m[n - 1].abs());
    }
    out
}

struct DominantWalker {
    family: Family,
    n: usize,
    lam_prefix: Vec<i64>,
    total: i64,
    parity: i64,
    out: Vec<Vec<i64>>,
}

impl DominantWalker {
    fn lattice_ok(&self, current: &[i64], sum: i64) -> bool {
        // Conditions on the full difference lambda - mu.
        let deficit = self.total - sum;
        match self.family {
            Family::Gl => deficit == 0,
            Family::SoOdd => deficit >= 0,
            Family::Sp => deficit >= 0 && deficit % 4 == 0,
            Family::SoEven => {
                // Rank 1 has an empty root system: the only weight is
                // lambda itself.
                if self.n == 1 {
                    return deficit == 0;
                }
                // S_n even plus S_{n-1} >= S_n / 2 in true units.
                if deficit < 0 || deficit % 4 != 0 {
                    return false;
                }
                let s_prev = self.lam_prefix[self.n - 2] - (sum - current[self.n - 1]);
                s_prev >= deficit / 2
            }
            Family::G2 => unreachable!(),
        }
    }

    fn walk(&mut self, current: &mut Vec<i64>, sum: i64, max_entry: i64) {
        let depth = current.len();
        if depth == self.n {
            if self.lattice_ok(current, sum) {
                self.out.push(current.clone());
            }
            return;
        }
        let last_slot = depth == self.n - 1;
        // The mirror chamber of SO(2n) allows a negative last coordinate.
        let lo = if last_slot && self.family == Family::SoEven {
            -max_entry
        } else {
            0
        };
        // Entries keep the parity class of lambda (the root lattice is
        // integral), and stay weakly below the previous entry.
        let mut v = max_entry - ((max_entry - self.parity).rem_euclid(2)).abs();
        while v >= lo {
            let new_sum = sum + v;
            // Partial-sum feasibility: S_depth >= 0 for the middle slots.
            let s_ok = last_slot || new_sum <= self.lam_prefix[depth];
            // GL must still be able to reach the exact total.
            let reach_ok = self.family != Family::Gl
                || new_sum + (self.n as i64 - depth as i64 - 1) * v >= self.total;
            if s_ok && reach_ok {
                current.push(v);
                self.walk(current, new_sum, v);
                current.pop();
            }
            v -= 2;
        }
    }
}

type CacheKey = (Family, usize, Vec<i64>);

fn multiplicity_cache() -> &'static Mutex<HashMap<CacheKey, Arc<MultiplicityTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<MultiplicityTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiplicity of every dominant weight of the representation, by
/// Freudenthal's recursion. Tables are memoized per `(group, lambda)`;
/// repeated calls share one table. G2 is unsupported: its ground truth
/// routes through [`g2_char_curve`].
pub fn freudenthal_multiplicities(
    group: GroupId,
    lambda: &HalfIntVector,
) -> Result<Arc<MultiplicityTable>> {
    if group.family == Family::G2 {
        return Err(Error::UnsupportedGroup {
            group: group.to_string(),
        });
    }
    require_dominant(group, lambda)?;
    let lam_d = lambda.to_doubled_i64();
    let key = (group.family, group.rank, lam_d.clone());
    if let Some(hit) = multiplicity_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }

    let roots = positive_roots(group).positive_roots;
    let rho_d = rho(group).to_doubled_i64();
    let lam_rho = add_scaled(&lam_d, &rho_d, 1);
    let lam_rho_norm = dot(&lam_rho, &lam_rho);
    let lam_norm = dot(&lam_d, &lam_d);

    let mut dominants = dominant_weights_below(group.family, &lam_d);
    // Descending |mu + rho|^2 is a linear extension of the dominance order,
    // so every lookup below lands on an already-computed multiplicity.
    dominants.sort_by_key(|m| {
        let m_rho = add_scaled(m, &rho_d, 1);
        -dot(&m_rho, &m_rho)
    });
    debug_assert_eq!(dominants.first(), Some(&lam_d));

    let mut table: HashMap<Vec<i64>, BigInt> = HashMap::new();
    table.insert(lam_d.clone(), BigInt::one());
    for mu in dominants.iter().skip(1) {
        let mu_rho = add_scaled(mu, &rho_d, 1);
        let denom = lam_rho_norm - dot(&mu_rho, &mu_rho);
        debug_assert!(denom > 0);
        let mut num = BigInt::zero();
        for alpha in &roots {
            let alpha2: Vec<i64> = alpha.iter().map(|x| 2 * x).collect();
            let mut xi = add_scaled(mu, &alpha2, 1);
            while dot(&xi, &xi) <= lam_norm {
                if let Some(m) = table.get(&dominant_form(group.family, &xi)) {
                    num += m * BigInt::from(dot(&xi, alpha));
                }
                xi = add_scaled(&xi, &alpha2, 1);
            }
        }
        if num.is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&(num * 4), &BigInt::from(denom));
        assert!(r.is_zero(), "Freudenthal numerator must divide exactly");
        assert!(q.is_positive());
        table.insert(mu.clone(), q);
    }

    let mut entries: Vec<(HalfIntVector, BigInt)> = table
        .into_iter()
        .map(|(m, c)| (HalfIntVector::from_doubled(&m), c))
        .collect();
    entries.sort_by(|a, b| b.0.cmp(&a.0));
    let index = entries
        .iter()
        .enumerate()
        .map(|(i, (m, _))| (m.to_doubled_i64(), i))
        .collect();
    let result = Arc::new(MultiplicityTable {
        group,
        lambda: lambda.clone(),
        entries,
        index,
    });
    multiplicity_cache()
        .lock()
        .unwrap()
        .insert(key, result.clone());
    Ok(result)
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn distinct_permutations(mut v: Vec<i64>) -> Vec<Vec<i64>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// Distinct Weyl images of a dominant weight, in doubled coordinates.
fn weyl_orbit_vectors(family: Family, mu_d: &[i64]) -> Vec<Vec<i64>> {
    let abs: Vec<i64> = mu_d.iter().map(|x| x.abs()).collect();
    let neg_parity = mu_d.iter().filter(|x| x.is_negative()).count() % 2;
    match family {
        Family::Gl => distinct_permutations(mu_d.to_vec()),
        Family::Sp | Family::SoOdd | Family::SoEven => {
            let has_zero = abs.contains(&0);
            let mut out = Vec::new();
            for arrangement in distinct_permutations(abs) {
                let nonzero: Vec<usize> = (0..arrangement.len())
                    .filter(|&i| arrangement[i] != 0)
                    .collect();
                // Every subset of nonzero positions gives a distinct image;
                // SO(2n) without zero entries keeps only flips matching the
                // sign parity of the original weight.
                for mask in 0u64..(1u64 << nonzero.len()) {
                    if family == Family::SoEven
                        && !has_zero
                        && (mask.count_ones() as usize) % 2 != neg_parity
                    {
                        continue;
                    }
                    let mut img = arrangement.clone();
                    for (bit, &pos) in nonzero.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            img[pos] = -img[pos];
                        }
                    }
                    out.push(img);
                }
            }
            out
        }
        Family::G2 => unreachable!("no orbit bookkeeping for G2"),
    }
}

/// Number of distinct Weyl images of a dominant weight.
pub fn weyl_orbit_size(group: GroupId, mu: &HalfIntVector) -> Result<BigInt> {
    if group.family == Family::G2 {
        return Err(Error::UnsupportedGroup {
            group: group.to_string(),
        });
    }
    require_dominant(group, mu)?;
    Ok(BigInt::from(
        weyl_orbit_vectors(group.family, &mu.to_doubled_i64()).len(),
    ))
}

fn sqrt_exact(x: &BigRational) -> Result<BigRational> {
    if x.is_negative() {
        return Err(Error::NonIntegralPower {
            base: x.to_string(),
        });
    }
    let num = x.numer().sqrt();
    let den = x.denom().sqrt();
    if &(&num * &num) == x.numer() && &(&den * &den) == x.denom() {
        Ok(BigRational::new(num, den))
    } else {
        Err(Error::NonIntegralPower {
            base: x.to_string(),
        })
    }
}

/// `t^(d/2)` for a doubled exponent d.
fn power_doubled(t: &BigRational, d: i64) -> Result<BigRational> {
    if d % 2 == 0 {
        Ok(rational_pow(t, d / 2))
    } else {
        let root = sqrt_exact(t)?;
        Ok(rational_pow(&root, d))
    }
}

/// The character of the highest-weight representation at a torus point:
/// the multiplicity-weighted sum of torus monomials over all Weyl images of
/// all dominant weights. Exact at every point, including the singular
/// order-2 elements; at coordinates of modulus 1 the value is an integer.
pub fn char_at(group: GroupId, lambda: &HalfIntVector, t: &TorusPoint) -> Result<BigRational> {
    if group.family == Family::G2 {
        return Err(Error::UnsupportedGroup {
            group: group.to_string(),
        });
    }
    require_dominant(group, lambda)?;
    if t.len() != group.rank {
        return Err(Error::RankMismatch {
            expected: group.rank,
            got: t.len(),
        });
    }

    // GL weights with negative entries: peel off a determinant power.
    if group.family == Family::Gl {
        let last = lambda.get(group.rank - 1);
        if last.is_negative() {
            let shift = last.clone();
            let shifted = lambda.add_constant(&shift.neg());
            let det: BigRational = t.coords().iter().product();
            let m = shift.as_integer().expect("GL weights are integral");
            use num_traits::ToPrimitive;
            let factor = rational_pow(&det, m.to_i64().expect("weight in range"));
            return Ok(factor * char_at(group, &shifted, t)?);
        }
    }

    let table = freudenthal_multiplicities(group, lambda)?;
    let one = BigRational::one();
    let minus_one = -BigRational::one();
    let signs_only = t.coords().iter().all(|c| c == &one || c == &minus_one);

    let mut total = BigRational::zero();
    for (mu, mult) in table.iter() {
        let mu_d = mu.to_doubled_i64();
        let mut orbit_sum = BigRational::zero();
        if signs_only && mu.all_integer() {
            let neg: Vec<bool> = t.coords().iter().map(|c| c == &minus_one).collect();
            let mut balance: i64 = 0;
            for nu in weyl_orbit_vectors(group.family, &mu_d) {
                let mut parity = 0i64;
                for (i, &d) in nu.iter().enumerate() {
                    if neg[i] {
                        parity += d / 2;
                    }
                }
                balance += if parity % 2 == 0 { 1 } else { -1 };
            }
            orbit_sum = BigRational::from_integer(BigInt::from(balance));
        } else {
            for nu in weyl_orbit_vectors(group.family, &mu_d) {
                let mut term = BigRational::one();
                for (i, &d) in nu.iter().enumerate() {
                    term *= power_doubled(&t.coords()[i], d)?;
                }
                orbit_sum += term;
            }
        }
        total += BigRational::from_integer(mult.clone()) * orbit_sum;
    }
    Ok(total)
}

/// Elementary symmetric evaluations `e_0..e_n` of the coordinates.
fn elementary_symmetric(t: &[BigRational]) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); t.len() + 1];
    e[0] = BigRational::one();
    for (count, x) in t.iter().enumerate() {
        for j in (1..=count + 1).rev() {
            let bump = &e[j - 1] * x;
            e[j] += bump;
        }
    }
    e
}

/// Complete homogeneous evaluations `h_0..h_max` via the Newton-style
/// recurrence of the generating product `prod 1/(1 - t_i z)`.
fn complete_homogeneous(t: &[BigRational], max: usize) -> Vec<BigRational> {
    let e = elementary_symmetric(t);
    let n = t.len();
    let mut h = vec![BigRational::zero(); max + 1];
    h[0] = BigRational::one();
    for m in 1..=max {
        let mut acc = BigRational::zero();
        for i in 1..=m.min(n) {
            let term = &e[i] * &h[m - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h[m] = acc;
    }
    h
}

/// Schur polynomial evaluation by the Jacobi–Trudi determinant
/// `det(h_{lambda_i - i + j})`. An independent second oracle for GL that
/// stays finite at singular points.
pub fn schur_eval(lambda: &HalfIntVector, t: &[BigRational]) -> BigRational {
    assert!(
        lambda.all_integer() && lambda.is_weakly_decreasing() && lambda.last_nonnegative(),
        "Schur evaluation needs a partition"
    );
    let parts: Vec<i64> = lambda
        .iter()
        .map(|p| {
            use num_traits::ToPrimitive;
            p.as_integer()
                .unwrap()
                .to_i64()
                .expect("partition entry in range")
        })
        .collect();
    let ell = parts.len();
    if ell == 0 {
        return BigRational::one();
    }
    let max_h = (parts[0] as usize) + ell;
    let h = complete_homogeneous(t, max_h);
    let rows: Vec<Vec<BigRational>> = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| {
                    let idx = parts[i] - i as i64 + j as i64;
                    if idx < 0 {
                        BigRational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    crate::detkit::det_rational(&rows)
}

/// `h_m` at the symbolic point `(x, -x, -x^-2)`, as Laurent polynomials.
fn g2_curve_h(max: usize) -> Vec<LaurentPoly> {
    // e_1 = -x^-2, e_2 = -x^2, e_3 = 1 at this point.
    let e1 = LaurentPoly::monomial(-2, BigInt::from(-1));
    let e2 = LaurentPoly::monomial(2, BigInt::from(-1));
    let e3 = LaurentPoly::one();
    let mut h: Vec<LaurentPoly> = Vec::with_capacity(max + 1);
    h.push(LaurentPoly::one());
    for m in 1..=max {
        let mut acc = e1.mul(&h[m - 1]);
        if m >= 2 {
            acc = acc.sub(&e2.mul(&h[m - 2]));
        }
        if m >= 3 {
            acc = acc.add(&e3.mul(&h[m - 3]));
        }
        h.push(acc);
    }
    h
}

fn g2_curve_schur(parts: [i64; 3], h: &[LaurentPoly]) -> LaurentPoly {
    let entry = |i: i64, j: i64| -> LaurentPoly {
        let idx = parts[i as usize] - i + j;
        if idx < 0 {
            LaurentPoly::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    // 3x3 Jacobi-Trudi determinant, expanded directly.
    let m: Vec<Vec<LaurentPoly>> = (0..3)
        .map(|i| (0..3).map(|j| entry(i, j)).collect())
        .collect();
    let c0 = m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1]));
    let c1 = m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0]));
    let c2 = m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0]));
    m[0][0]
        .mul(&c0)
        .sub(&m[0][1].mul(&c1))
        .add(&m[0][2].mul(&c2))
}

/// The denominator of the G2 Schur-ratio at the curve point: the character
/// difference of the dual-standard and standard SL3 representations,
/// `e_2 - e_1 = x^-2 - x^2`.
pub fn g2_curve_denominator() -> LaurentPoly {
    let h = g2_curve_h(3);
    g2_curve_schur([1, 1, 0], &h).sub(&g2_curve_schur([1, 0, 0], &h))
}

/// The G2 character of highest weight `k w1 + l w2` along the curve
/// `(x, -x, -x^-2)`, as an exact Laurent polynomial: the Schur-ratio
/// numerator and denominator are evaluated symbolically and divided
/// exactly. The quotient is a character, so a nonzero remainder can only
/// mean an implementation bug, which surfaces as `InexactDivision`.
pub fn g2_char_curve(k: u32, l: u32) -> Result<LaurentPoly> {
    let (k, l) = (k as i64, l as i64);
    let top = (k + 2 * l + 3) as usize;
    let h = g2_curve_h(top);
    let num = g2_curve_schur([k + 2 * l + 1, k + l + 1, 0], &h)
        .sub(&g2_curve_schur([k + 2 * l + 1, l, 0], &h));
    let den = g2_curve_schur([1, 1, 0], &h).sub(&g2_curve_schur([1, 0, 0], &h));
    num.div_exact(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::order2_element;

    fn v(entries: &[i64]) -> HalfIntVector {
        HalfIntVector::from_ints(entries)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn point(coords: &[i64]) -> TorusPoint {
        TorusPoint::new(coords.iter().map(|&c| rat(c)).collect()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        let gl3 = positive_roots(GroupId::gl(3));
        assert_eq!(gl3.positive_roots.len(), 3);
        assert!(gl3.positive_roots.contains(&vec![1, -1, 0]));
        assert!(gl3.positive_roots.contains(&vec![1, 0, -1]));
        assert!(gl3.positive_roots.contains(&vec![0, 1, -1]));

        let sp2 = positive_roots(GroupId::sp(2));
        assert_eq!(sp2.positive_roots.len(), 4);
        assert!(sp2.positive_roots.contains(&vec![2, 0]));
        assert!(sp2.positive_roots.contains(&vec![0, 2]));

        // n(n-1) for SO(2n), checked against the enumeration.
        for n in 2..=5 {
            assert_eq!(
                positive_roots(GroupId::so_even(n)).positive_roots.len(),
                n * (n - 1)
            );
            assert_eq!(
                positive_roots(GroupId::so_odd(n)).positive_roots.len(),
                n * n
            );
            assert_eq!(positive_roots(GroupId::sp(n)).positive_roots.len(), n * n);
        }
        assert_eq!(positive_roots(GroupId::g2()).positive_roots.len(), 6);
    }

    // Independent dimension oracle for GL: hook-content formula.
    fn hook_content_dim(n: i64, parts: &[i64]) -> BigInt {
        let rows = parts.len();
        let col_len = |j: i64| -> i64 { (0..rows).filter(|&r| parts[r] > j).count() as i64 };
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (i, &len) in parts.iter().enumerate() {
            for j in 0..len {
                let arm = len - 1 - j;
                let leg = col_len(j) - 1 - i as i64;
                num *= BigInt::from(n + j - i as i64);
                den *= BigInt::from(arm + leg + 1);
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        assert!(r.is_zero());
        q
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(
            weyl_dim(GroupId::gl(3), &v(&[2, 1, 0])).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(hook_content_dim(3, &[2, 1]), BigInt::from(8));
        for group in [
            GroupId::gl(3),
            GroupId::sp(3),
            GroupId::so_even(3),
            GroupId::so_odd(3),
        ] {
            assert_eq!(
                weyl_dim(group, &HalfIntVector::zero(group.rank)).unwrap(),
                BigInt::one()
            );
        }
        assert_eq!(weyl_dim(GroupId::g2(), &v(&[0, 0])).unwrap(), BigInt::one());
        assert_eq!(
            weyl_dim(GroupId::g2(), &v(&[1, 0])).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            weyl_dim(GroupId::g2(), &v(&[0, 1])).unwrap(),
            BigInt::from(14)
        );
    }

    #[test]
    fn weyl_dim_matches_hook_content_on_gl_sweep() {
        for n in 2..=4i64 {
            let shapes: Vec<Vec<i64>> = match n {
                2 => vec![vec![1, 0], vec![2, 0], vec![2, 1], vec![3, 1]],
                3 => vec![vec![1, 0, 0], vec![2, 1, 0], vec![2, 2, 1], vec![3, 1, 1]],
                _ => vec![vec![1, 0, 0, 0], vec![2, 1, 1, 0], vec![3, 2, 1, 0]],
            };
            for shape in shapes {
                let lam = v(&shape);
                assert_eq!(
                    weyl_dim(GroupId::gl(n as usize), &lam).unwrap(),
                    hook_content_dim(n, &shape),
                    "gl({}) lambda {:?}",
                    n,
                    shape
                );
            }
        }
    }

    #[test]
    fn spin_dimension_is_power_of_two() {
        // Brute-force Weyl product, written out independently of weyl_dim.
        for k in 2..=5usize {
            let spin = HalfIntVector::from_doubled(&vec![1; k]);
            let mut num = BigRational::one();
            let lam_rho: Vec<BigRational> = (0..k)
                .map(|i| {
                    BigRational::new(BigInt::from(1), BigInt::from(2))
                        + BigRational::from_integer(BigInt::from((k - 1 - i) as i64))
                })
                .collect();
            let rho_v: Vec<BigRational> = (0..k)
                .map(|i| BigRational::from_integer(BigInt::from((k - 1 - i) as i64)))
                .collect();
            for i in 0..k {
                for j in i + 1..k {
                    num *= (&lam_rho[i] - &lam_rho[j]) / (&rho_v[i] - &rho_v[j]);
                    num *= (&lam_rho[i] + &lam_rho[j]) / (&rho_v[i] + &rho_v[j]);
                }
            }
            let expected = BigInt::from(2).pow(k as u32 - 1);
            assert_eq!(num, BigRational::from_integer(expected.clone()));
            assert_eq!(weyl_dim(GroupId::so_even(k), &spin).unwrap(), expected);
        }
    }

    // Semistandard tableau counter: Kostka number K_{lambda,mu} by direct
    // enumeration of fillings with weakly increasing rows and strictly
    // increasing columns.
    fn kostka_by_ssyt(shape: &[usize], weight: &[usize]) -> u64 {
        fn fill(
            shape: &[usize],
            rows: &mut Vec<Vec<usize>>,
            remaining: &mut Vec<usize>,
            r: usize,
            c: usize,
        ) -> u64 {
            if r == shape.len() {
                return 1;
            }
            if c == shape[r] {
                return fill(shape, rows, remaining, r + 1, 0);
            }
            let mut count = 0;
            for value in 0..remaining.len() {
                if remaining[value] == 0 {
                    continue;
                }
                if c > 0 && rows[r][c - 1] > value {
                    continue;
                }
                if r > 0 && shape[r - 1] > c && rows[r - 1][c] >= value {
                    continue;
                }
                rows[r].push(value);
                remaining[value] -= 1;
                count += fill(shape, rows, remaining, r, c + 1);
                remaining[value] += 1;
                rows[r].pop();
            }
            count
        }
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
        let mut remaining = weight.to_vec();
        fill(shape, &mut rows, &mut remaining, 0, 0)
    }

    #[test]
    fn freudenthal_examples() {
        // Kostka oracle: K_{(2,1),(1,1,1)} = 2.
        assert_eq!(kostka_by_ssyt(&[2, 1], &[1, 1, 1]), 2);
        let table = freudenthal_multiplicities(GroupId::gl(3), &v(&[2, 1, 0])).unwrap();
        assert_eq!(table.multiplicity(&v(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(table.multiplicity(&v(&[2, 1, 0])), BigInt::one());

        // Sp(4), lambda = (1,1): the 5-dimensional representation. The
        // orbit of (1,1) has size 4, so the zero weight appears once.
        let table = freudenthal_multiplicities(GroupId::sp(2), &v(&[1, 1])).unwrap();
        assert_eq!(table.multiplicity(&v(&[0, 0])), BigInt::one());
        assert_eq!(
            weyl_dim(GroupId::sp(2), &v(&[1, 1])).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            weyl_orbit_size(GroupId::sp(2), &v(&[1, 1])).unwrap(),
            BigInt::from(4)
        );
    }

    #[test]
    fn freudenthal_rejects_g2() {
        assert!(matches!(
            freudenthal_multiplicities(GroupId::g2(), &v(&[1, 0])),
            Err(Error::UnsupportedGroup { .. })
        ));
    }

    #[test]
    fn multiplicities_sum_to_dimension() {
        let cases = [
            (GroupId::gl(3), v(&[3, 1, 0])),
            (GroupId::gl(4), v(&[2, 2, 1, 0])),
            (GroupId::sp(2), v(&[2, 1])),
            (GroupId::sp(3), v(&[2, 1, 1])),
            (GroupId::so_even(3), v(&[2, 1, 0])),
            (GroupId::so_even(4), v(&[1, 1, 1, 1])),
            (GroupId::so_odd(2), v(&[2, 1])),
            (GroupId::so_odd(3), v(&[2, 1, 1])),
            (GroupId::so_odd(2), HalfIntVector::from_doubled(&[3, 1])),
        ];
        for (group, lam) in cases {
            let table = freudenthal_multiplicities(group, &lam).unwrap();
            let mut total = BigInt::zero();
            for (mu, mult) in table.iter() {
                total += mult * weyl_orbit_size(group, mu).unwrap();
            }
            assert_eq!(
                total,
                weyl_dim(group, &lam).unwrap(),
                "{} lambda {}",
                group,
                lam
            );
        }
    }

    #[test]
    fn char_at_examples() {
        for group in [GroupId::gl(3), GroupId::sp(2), GroupId::so_odd(2)] {
            let zero = HalfIntVector::zero(group.rank);
            let t = order2_element(group, 1).unwrap();
            assert_eq!(char_at(group, &zero, &t).unwrap(), BigRational::one());
        }
        assert_eq!(
            char_at(GroupId::gl(2), &v(&[1, 0]), &point(&[1, -1])).unwrap(),
            BigRational::zero()
        );
        // e_2(1,1,-1,-1) = -2 by direct pair enumeration.
        let t = point(&[1, 1, -1, -1]);
        let coords = t.coords();
        let mut e2 = BigRational::zero();
        for i in 0..4 {
            for j in i + 1..4 {
                e2 += &coords[i] * &coords[j];
            }
        }
        assert_eq!(e2, rat(-2));
        assert_eq!(
            char_at(GroupId::gl(4), &v(&[1, 1, 0, 0]), &t).unwrap(),
            rat(-2)
        );
    }

    #[test]
    fn char_at_identity_is_dimension() {
        let cases = [
            (GroupId::gl(4), v(&[3, 2, 1, 0])),
            (GroupId::sp(3), v(&[2, 2, 1])),
            (GroupId::so_even(4), v(&[2, 1, 1, 0])),
            (GroupId::so_odd(3), v(&[2, 1, 1])),
            (GroupId::so_even(3), HalfIntVector::from_doubled(&[3, 1, 1])),
        ];
        for (group, lam) in cases {
            let id = TorusPoint::identity(group.rank);
            assert_eq!(
                char_at(group, &lam, &id).unwrap(),
                BigRational::from_integer(weyl_dim(group, &lam).unwrap())
            );
        }
    }

    #[test]
    fn rank_one_so_even_is_a_torus_character() {
        // D_1 has no roots: the representation is the single torus
        // character of its weight.
        let g = GroupId::so_even(1);
        let lam = v(&[3]);
        assert_eq!(weyl_dim(g, &lam).unwrap(), BigInt::one());
        let t = TorusPoint::new(vec![rat(2)]).unwrap();
        assert_eq!(char_at(g, &lam, &t).unwrap(), rat(8));
        let table = freudenthal_multiplicities(g, &lam).unwrap();
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn char_at_handles_negative_gl_weights() {
        // (0,0,0,-1) is the dual of the standard representation.
        let t = point(&[1, 1, 1, -1]);
        assert_eq!(
            char_at(GroupId::gl(4), &v(&[0, 0, 0, -1]), &t).unwrap(),
            rat(2)
        );
        let id = TorusPoint::identity(4);
        assert_eq!(
            char_at(GroupId::gl(4), &v(&[0, 0, 0, -1]), &id).unwrap(),
            rat(4)
        );
    }

    #[test]
    fn schur_examples() {
        let t = vec![rat(2), rat(3), rat(5)];
        assert_eq!(schur_eval(&v(&[1, 0, 0]), &t), rat(10));
        assert_eq!(schur_eval(&v(&[1, 1]), &[rat(1), rat(-1)]), rat(-1));
        assert_eq!(
            schur_eval(&v(&[2, 1, 0]), &[rat(1), rat(1), rat(1)]),
            rat(8)
        );
    }

    #[test]
    fn schur_matches_char_at_on_gl() {
        let lams = [v(&[2, 1, 0]), v(&[3, 1, 1]), v(&[2, 2, 0])];
        let points = [
            vec![rat(1), rat(1), rat(-1)],
            vec![rat(2), rat(-3), rat(5)],
            vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                rat(-2),
                BigRational::new(BigInt::from(3), BigInt::from(4)),
            ],
        ];
        for lam in &lams {
            for coords in &points {
                let t = TorusPoint::new(coords.clone()).unwrap();
                assert_eq!(
                    char_at(GroupId::gl(3), lam, &t).unwrap(),
                    schur_eval(lam, coords),
                    "lambda {} at {:?}",
                    lam,
                    coords
                );
            }
        }
    }

    #[test]
    fn weyl_invariance_of_char_at() {
        // GL: permuting coordinates; Sp/SO(2n+1): any sign flips;
        // SO(2n): evenly many sign flips.
        let coords = vec![rat(2), rat(-3), rat(5)];
        let lam = v(&[2, 1, 0]);
        let base = char_at(
            GroupId::gl(3),
            &lam,
            &TorusPoint::new(coords.clone()).unwrap(),
        )
        .unwrap();
        let swapped = vec![rat(5), rat(2), rat(-3)];
        assert_eq!(
            char_at(GroupId::gl(3), &lam, &TorusPoint::new(swapped).unwrap()).unwrap(),
            base
        );

        let lam = v(&[2, 1]);
        for group in [GroupId::sp(2), GroupId::so_odd(2)] {
            let base =
                char_at(group, &lam, &TorusPoint::new(vec![rat(2), rat(3)]).unwrap()).unwrap();
            let flipped = TorusPoint::new(vec![
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                rat(3),
            ])
            .unwrap();
            assert_eq!(char_at(group, &lam, &flipped).unwrap(), base, "{}", group);
        }

        let lam = v(&[2, 1]);
        let base = char_at(
            GroupId::so_even(2),
            &lam,
            &TorusPoint::new(vec![rat(2), rat(3)]).unwrap(),
        )
        .unwrap();
        let both = TorusPoint::new(vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(3)),
        ])
        .unwrap();
        assert_eq!(char_at(GroupId::so_even(2), &lam, &both).unwrap(), base);
    }

    #[test]
    fn g2_curve_examples() {
        assert_eq!(g2_char_curve(0, 0).unwrap(), LaurentPoly::one());
        // The denominator at (x,-x,-x^-2): e_2 - e_1 = x^-2 - x^2.
        assert_eq!(
            g2_curve_denominator(),
            LaurentPoly::from_terms(&[(-2, 1), (2, -1)])
        );
        // The 7-dimensional representation restricted to the curve.
        let theta10 = g2_char_curve(1, 0).unwrap();
        assert_eq!(
            theta10,
            LaurentPoly::from_terms(&[(2, -1), (0, 1), (-2, -1)])
        );
        assert_eq!(theta10.eval_at_one(), BigInt::from(-1));
    }

    #[test]
    fn g2_curve_values_are_integral_at_one() {
        for k in 0..=6u32 {
            for l in 0..=6u32 {
                let p = g2_char_curve(k, l).unwrap();
                // eval_at_one is an integer by construction; cross-check
                // against a rational evaluation at x = 1.
                assert_eq!(
                    BigRational::from_integer(p.eval_at_one()),
                    p.eval(&BigRational::one())
                );
            }
        }
    }
}
