//! Exact closed-form counting: Möbius function, primitive-necklace counts,
//! the per-parity aggregates over `N_λ`, the alternating-sum inversion
//! recovering `|C_λ(m)|`, and the induced-character values `χ_λ`.
//!
//! Everything here is arbitrary-precision integer arithmetic; no value is
//! ever rounded. Factorials are memoized process-wide behind a lock.

use std::collections::BTreeMap;
use std::sync::RwLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

use crate::perm::{compositions, Composition};
use crate::report::{params, ReportValue, VerificationReport};

/// Exact arbitrary-precision signed integer used for every count.
pub type ExactInt = BigInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    #[error("mobius is undefined at 0")]
    MobiusAtZero,
    #[error("at least one positive count is required")]
    EmptyContent,
    #[error("parity index {m} out of range 0..={n}")]
    OutOfRange { m: usize, n: usize },
}

static FACTORIALS: Lazy<RwLock<Vec<BigInt>>> = Lazy::new(|| RwLock::new(vec![BigInt::one()]));

/// `n!` with a shared memo table.
pub fn factorial(n: usize) -> BigInt {
    {
        let table = FACTORIALS.read().expect("factorial table lock");
        if let Some(value) = table.get(n) {
            return value.clone();
        }
    }
    let mut table = FACTORIALS.write().expect("factorial table lock");
    while table.len() <= n {
        let next = table.last().expect("table nonempty") * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient with the convention that out-of-range choices are 0.
pub fn binomial(n: usize, k: isize) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let n: usize = parts.iter().sum();
    let mut result = factorial(n);
    for &p in parts {
        result /= factorial(p);
    }
    result
}

/// Number-theoretic Möbius function: `(-1)^t` for a squarefree product of
/// t distinct primes, 0 otherwise.
pub fn mobius(n: u64) -> Result<BigInt, CountingError> {
    if n == 0 {
        return Err(CountingError::MobiusAtZero);
    }
    let mut remaining = n;
    let mut prime_count = 0u32;
    let mut p = 2u64;
    while p * p <= remaining {
        if remaining % p == 0 {
            remaining /= p;
            if remaining % p == 0 {
                return Ok(BigInt::zero());
            }
            prime_count += 1;
        }
        p += 1;
    }
    if remaining > 1 {
        prime_count += 1;
    }
    Ok(if prime_count % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    })
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Number of primitive necklace classes with the given letter content, by
/// Möbius inversion over the common period:
/// `(1/n) Σ_{ℓ | gcd} μ(ℓ) · multinomial(n/ℓ; a/ℓ)`.
///
/// Zero counts are dropped before taking the gcd, extending the classical
/// formula to contents with missing letters.
pub fn primitive_necklaces(contents: &[usize]) -> Result<BigInt, CountingError> {
    let nonzero: Vec<usize> = contents.iter().copied().filter(|&a| a > 0).collect();
    if nonzero.is_empty() {
        return Err(CountingError::EmptyContent);
    }
    let n: usize = nonzero.iter().sum();
    let g = nonzero.iter().fold(0usize, |g, &a| num_integer::gcd(g, a));
    let mut sum = BigInt::zero();
    for ell in divisors(g) {
        let mu = mobius(ell as u64)?;
        if mu.is_zero() {
            continue;
        }
        let scaled: Vec<usize> = nonzero.iter().map(|&a| a / ell).collect();
        sum += mu * multinomial(&scaled);
    }
    debug_assert!((&sum % BigInt::from(n)).is_zero());
    Ok(sum / BigInt::from(n))
}

/// Walks all vectors `0 <= v_t <= caps[t]` with `Σ v_t = target`.
fn for_each_capped_vector(caps: &[usize], target: usize, f: &mut impl FnMut(&[usize])) {
    fn go(
        caps: &[usize],
        remaining: usize,
        slack: usize,
        current: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if caps.is_empty() {
            if remaining == 0 {
                f(current);
            }
            return;
        }
        let cap = caps[0];
        let rest_slack = slack - cap;
        for v in 0..=cap.min(remaining) {
            if remaining - v > rest_slack {
                continue;
            }
            current.push(v);
            go(&caps[1..], remaining - v, rest_slack, current, f);
            current.pop();
        }
    }
    let slack: usize = caps.iter().sum();
    if target > slack {
        return;
    }
    go(caps, target, slack, &mut Vec::with_capacity(caps.len()), f);
}

/// Number of primitive classes in `N_λ` with exactly `m` odd letters:
/// the sum of `L(λ_1-i_1, i_1, ..., λ_k-i_k, i_k)` over all ways to place
/// `m` odd letters into the blocks.
pub fn primitive_class_count(lam: &Composition, m: usize) -> Result<BigInt, CountingError> {
    let n = lam.n();
    if m > n {
        return Err(CountingError::OutOfRange { m, n });
    }
    let mut sum = BigInt::zero();
    let mut error = None;
    for_each_capped_vector(lam.parts(), m, &mut |odd_counts| {
        let mut contents = Vec::with_capacity(2 * lam.k());
        for (&part, &odd) in lam.parts().iter().zip(odd_counts) {
            contents.push(part - odd);
            contents.push(odd);
        }
        match primitive_necklaces(&contents) {
            Ok(count) => sum += count,
            Err(e) => error = Some(e),
        }
    });
    match error {
        Some(e) => Err(e),
        None => Ok(sum),
    }
}

/// `|N_λ^(m)|` in closed form: the primitive count, plus the 2-periodic
/// classes `q²` (with `o(q) = m/2` odd) that exist exactly when the part
/// gcd is even and `m ≡ 2 (mod 4)`.
pub fn necklace_class_count(lam: &Composition, m: usize) -> Result<BigInt, CountingError> {
    let n = lam.n();
    if m > n {
        return Err(CountingError::OutOfRange { m, n });
    }
    let mut count = primitive_class_count(lam, m)?;
    if lam.gcd() % 2 == 0 && m % 4 == 2 {
        let half = lam.halved().expect("even gcd means even parts");
        count += primitive_class_count(&half, m / 2)?;
    }
    Ok(count)
}

/// `|C_λ(m)|`, the number of λ-unimodal cycles with `m` descents outside
/// the partial sums, recovered from the necklace counts by the alternating
/// binomial inversion.
pub fn cyclic_class_count(lam: &Composition, m: usize) -> Result<BigInt, CountingError> {
    let n = lam.n();
    if m > n {
        return Err(CountingError::OutOfRange { m, n });
    }
    let k = lam.k();
    let mut sum = BigInt::zero();
    for j in 0..=m {
        let coeff = binomial(m - j + k - 1, (m - j) as isize);
        let term = coeff * necklace_class_count(lam, j)?;
        if (m - j) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// The induced-character value `χ_λ`: `(k-1)! d^{k-1} μ(d)` when all k
/// parts equal d, and 0 otherwise.
pub fn chi(lam: &Composition) -> BigInt {
    if !lam.is_rectangular() {
        return BigInt::zero();
    }
    let d = lam.parts()[0];
    let k = lam.k();
    let mu = mobius(d as u64).expect("parts are positive");
    factorial(k - 1) * BigInt::from(d).pow(k as u32 - 1) * mu
}

/// Bounds for [`check_counting_lemmas`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaBounds {
    /// Alternating binomial sums `Σ (-1)^i i^e C(n,i) = 0` for all n up to
    /// this bound and all exponents e < n.
    pub poly_n_max: usize,
    /// Box-choice identity `Σ (-1)^(i+k) C(di,k) C(k,i) = d^k` for d, k up
    /// to this bound.
    pub boxes_max: usize,
    /// Multinomial splitting identity for all compositions γ of r up to
    /// this bound and all subset sizes i ≤ r.
    pub split_r_max: usize,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        Self {
            poly_n_max: 10,
            boxes_max: 6,
            split_r_max: 10,
        }
    }
}

fn int_pow(base: usize, exp: usize) -> BigInt {
    if exp == 0 {
        return BigInt::one(); // 0^0 = 1 for the monomial basis
    }
    BigInt::from(base).pow(exp as u32)
}

/// Sweeps the three counting identities over every parameter tuple within
/// the bounds and reports how many tuples held exactly.
pub fn check_counting_lemmas(bounds: &LemmaBounds) -> VerificationReport {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut passed = 0u64;
    let mut note = |ok: bool| {
        checked += 1;
        if ok {
            passed += 1;
        }
    };

    // alternating binomial transform annihilates monomials of low degree
    for n in 1..=bounds.poly_n_max {
        for e in 0..n {
            let mut sum = BigInt::zero();
            for i in 0..=n {
                let term = int_pow(i, e) * binomial(n, i as isize);
                if i % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            note(sum.is_zero());
        }
    }

    // inclusion-exclusion over k boxes of d objects each
    for d in 1..=bounds.boxes_max {
        for k in 1..=bounds.boxes_max {
            let mut sum = BigInt::zero();
            for i in 1..=k {
                let term = binomial(d * i, k as isize) * binomial(k, i as isize);
                if (i + k) % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            note(sum == BigInt::from(d).pow(k as u32));
        }
    }

    // splitting r objects into capped groups and coloring i of them
    for r in 1..=bounds.split_r_max {
        for gamma in compositions(r) {
            for i in 0..=r {
                let mut lhs = BigInt::zero();
                for_each_capped_vector(gamma.parts(), i, &mut |chosen| {
                    let mut parts = Vec::with_capacity(2 * gamma.k());
                    for (&g, &a) in gamma.parts().iter().zip(chosen) {
                        parts.push(g - a);
                        parts.push(a);
                    }
                    lhs += multinomial(&parts);
                });
                let rhs = multinomial(gamma.parts()) * binomial(r, i as isize);
                note(lhs == rhs);
            }
        }
    }

    let map = params(&[
        ("poly_n_max", bounds.poly_n_max.to_string()),
        ("boxes_max", bounds.boxes_max.to_string()),
        ("split_r_max", bounds.split_r_max.to_string()),
    ]);
    VerificationReport::new(
        "counting_lemmas",
        map,
        ReportValue::count(passed),
        ReportValue::count(checked),
        checked,
        start.elapsed(),
    )
}

/// Histogram helper: `|N_λ^(m)|` in closed form for every m, as a map
/// keyed by m.
pub fn necklace_count_histogram(lam: &Composition) -> BTreeMap<usize, BigInt> {
    (0..=lam.n())
        .map(|m| (m, necklace_class_count(lam, m).expect("m in range")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(text: &str) -> Composition {
        Composition::parse(text).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn mobius_values() {
        let expected: [(u64, i64); 10] = [
            (1, 1),
            (2, -1),
            (3, -1),
            (4, 0),
            (5, -1),
            (6, 1),
            (8, 0),
            (9, 0),
            (12, 0),
            (30, -1),
        ];
        for (n, v) in expected {
            assert_eq!(mobius(n).unwrap(), int(v), "mu({n})");
        }
        assert_eq!(mobius(0), Err(CountingError::MobiusAtZero));
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(5, 6), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(multinomial(&[2, 2]), int(6));
        assert_eq!(multinomial(&[0, 3, 0]), int(1));
    }

    /// Brute-force oracle: counts necklace classes with the given content
    /// that are primitive, straight from the definitions.
    fn brute_primitive_classes(contents: &[usize]) -> u64 {
        let n: usize = contents.iter().sum();
        let mut letters: Vec<u8> = Vec::new();
        for (l, &c) in contents.iter().enumerate() {
            letters.extend(std::iter::repeat(l as u8).take(c));
        }
        let mut count = 0;
        loop {
            let rotations: Vec<Vec<u8>> = (0..n)
                .map(|r| letters[r..].iter().chain(&letters[..r]).copied().collect())
                .collect();
            let least = rotations.iter().all(|rot| letters[..] <= rot[..]);
            let primitive = rotations[1..].iter().all(|rot| rot[..] != letters[..]);
            if least && primitive {
                count += 1;
            }
            if !crate::perm::next_permutation(&mut letters) {
                break;
            }
        }
        count
    }

    #[test]
    fn primitive_necklace_examples() {
        assert_eq!(primitive_necklaces(&[1, 1]).unwrap(), int(1));
        assert_eq!(primitive_necklaces(&[2, 2]).unwrap(), int(1));
        assert_eq!(primitive_necklaces(&[1]).unwrap(), int(1));
        assert_eq!(primitive_necklaces(&[4]).unwrap(), int(0));
        assert_eq!(primitive_necklaces(&[0, 3, 0]).unwrap(), int(0));
        assert_eq!(primitive_necklaces(&[0, 0]), Err(CountingError::EmptyContent));
    }

    #[test]
    fn primitive_necklaces_match_brute_force() {
        // all contents over up to 4 letters with total at most 7
        fn contents_up_to(total: usize, letters: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut current = vec![0usize; letters];
            loop {
                let sum: usize = current.iter().sum();
                if (1..=total).contains(&sum) {
                    out.push(current.clone());
                }
                let mut i = 0;
                loop {
                    if i == letters {
                        return out;
                    }
                    if current[i] < total {
                        current[i] += 1;
                        break;
                    }
                    current[i] = 0;
                    i += 1;
                }
            }
        }
        for contents in contents_up_to(7, 4) {
            let expected = brute_primitive_classes(&contents);
            assert_eq!(
                primitive_necklaces(&contents).unwrap(),
                int(expected as i64),
                "contents {contents:?}"
            );
        }
    }

    #[test]
    fn primitive_class_count_symmetry() {
        for n in 1..=7usize {
            for lam in compositions(n) {
                for m in 0..=n {
                    assert_eq!(
                        primitive_class_count(&lam, m).unwrap(),
                        primitive_class_count(&lam, n - m).unwrap(),
                        "lambda {lam}, m {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn class_count_range_checks() {
        let lam = comp("2,1");
        assert!(primitive_class_count(&lam, 4).is_err());
        assert!(necklace_class_count(&lam, 4).is_err());
        assert!(cyclic_class_count(&lam, 4).is_err());
        // empty sums are fine
        assert_eq!(primitive_class_count(&comp("2"), 1).unwrap(), int(1));
    }

    #[test]
    fn necklace_class_count_two_periodic_branch() {
        // for (4,4) and m = 2, the 2-periodic classes like [(0221)^2] join in
        let lam = comp("4,4");
        let with_branch = necklace_class_count(&lam, 2).unwrap();
        let primitive_only = primitive_class_count(&lam, 2).unwrap();
        let halves = primitive_class_count(&comp("2,2"), 1).unwrap();
        assert_eq!(with_branch, primitive_only + halves.clone());
        assert_eq!(halves, int(6));
        // odd gcd keeps only the primitive part
        let odd = comp("3,6");
        for m in 0..=9 {
            assert_eq!(
                necklace_class_count(&odd, m).unwrap(),
                primitive_class_count(&odd, m).unwrap()
            );
        }
    }

    #[test]
    fn cyclic_class_count_small() {
        // n = 2, lambda = (2): the only cycle 21 has one excess descent
        let lam = comp("2");
        assert_eq!(cyclic_class_count(&lam, 0).unwrap(), int(0));
        assert_eq!(cyclic_class_count(&lam, 1).unwrap(), int(1));
        assert_eq!(cyclic_class_count(&lam, 2).unwrap(), int(0));
    }

    #[test]
    fn cyclic_class_count_matches_enumeration() {
        use crate::perm::{cyclic_lambda_unimodal, descent_excess};
        for n in 1..=6usize {
            for lam in compositions(n) {
                let mut observed = vec![0i64; n + 1];
                for p in cyclic_lambda_unimodal(&lam) {
                    observed[descent_excess(&p, &lam)] += 1;
                }
                for m in 0..=n {
                    assert_eq!(
                        cyclic_class_count(&lam, m).unwrap(),
                        int(observed[m]),
                        "lambda {lam}, m {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_roundtrip_recovers_necklace_counts() {
        for n in 1..=7usize {
            for lam in compositions(n) {
                let k = lam.k();
                for m in 0..=n {
                    let mut sum = BigInt::zero();
                    for j in 0..=k.min(m) {
                        sum += binomial(k, j as isize) * cyclic_class_count(&lam, m - j).unwrap();
                    }
                    assert_eq!(sum, necklace_class_count(&lam, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn chi_values() {
        assert_eq!(chi(&Composition::ones(5)), factorial(4));
        assert_eq!(chi(&comp("2,3")), int(0));
        assert_eq!(chi(&comp("2,2")), int(-2));
        assert_eq!(chi(&comp("3,3")), int(-3));
        assert_eq!(chi(&comp("2,2,2")), int(-8));
        assert_eq!(chi(&comp("4,4")), int(0));
        assert_eq!(chi(&comp("6")), int(1));
    }

    #[test]
    fn counting_lemma_spot_checks() {
        // d = 2, k = 2: -C(2,2)C(2,1) + C(4,2)C(2,2) = 4 = 2^2
        let lhs = -binomial(2, 2) * binomial(2, 1) + binomial(4, 2) * binomial(2, 2);
        assert_eq!(lhs, int(4));
        // single-block splitting: sum over a of C(r, a) picks C(r, i)
        let r = 5;
        for i in 0..=r {
            let mut lhs = BigInt::zero();
            for_each_capped_vector(&[r], i, &mut |chosen| {
                lhs += multinomial(&[r - chosen[0], chosen[0]]);
            });
            assert_eq!(lhs, binomial(r, i as isize));
        }
        let report = check_counting_lemmas(&LemmaBounds::default());
        assert!(report.pass);
        assert_eq!(report.lhs, report.rhs);
    }
}
