//! Named identity checks. Each check pairs a closed-form side with an
//! independent brute-force enumeration and reports exact equality.
//!
//! Checks are pure and independent; [`plan`] expands a selection of
//! identities over a size bound into a deterministic task list whose
//! reports are reproducible run to run (timing aside).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::counting::{
    binomial, chi, check_counting_lemmas, cyclic_class_count, factorial, mobius,
    necklace_class_count, primitive_class_count, LemmaBounds,
};
use crate::necklace::{enumerate_n_lambda, n_lambda_counts, ppat};
use crate::perm::{
    all_permutations, compositions, cyclic_lambda_unimodal, descent_excess, is_lambda_unimodal,
    lambda_unimodal, Composition, DescentSet, Permutation,
};
use crate::report::{params, ReportValue, VerificationReport};
use crate::tableaux::b_rho_descent_distribution;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("{0}")]
    BadInput(String),
}

/// The named identities the suite can run, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// Signed descent sum over `C(λ)` equals the induced character `χ_λ`.
    Main,
    /// Signed descent sum over unimodal cycles equals `μ(n)`.
    UnimodalMobius,
    /// Closed-form `|N_λ^(m)|` matches necklace enumeration.
    NecklaceCount,
    /// Primitive class counts are symmetric in `m ↔ n-m`.
    PrimitiveSymmetry,
    /// The alternating inversion recovers `|C_λ(m)|`, and the binomial
    /// round-trip recovers `|N_λ^(m)|`.
    CycleCount,
    /// `ppat` maps `N_λ^(m)` onto the right classes with binomial fibers.
    PpatFibers,
    /// Descent sets of `C_n` match the tableau basis distribution.
    Equidistribution,
    /// Descent counts of `S_{n-1}` split over `C_n` as `D` or `D ∪ {n-1}`.
    Elizalde,
    /// λ-unimodal signed sum is `n!` exactly for λ = (1^n).
    RegularFine,
    /// The three counting identities hold over their bounds.
    CountingLemmas,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::Main,
        Identity::UnimodalMobius,
        Identity::NecklaceCount,
        Identity::PrimitiveSymmetry,
        Identity::CycleCount,
        Identity::PpatFibers,
        Identity::Equidistribution,
        Identity::Elizalde,
        Identity::RegularFine,
        Identity::CountingLemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Main => "main",
            Identity::UnimodalMobius => "unimodal_mobius",
            Identity::NecklaceCount => "necklace_count",
            Identity::PrimitiveSymmetry => "primitive_symmetry",
            Identity::CycleCount => "cycle_count",
            Identity::PpatFibers => "ppat_fibers",
            Identity::Equidistribution => "equidistribution",
            Identity::Elizalde => "elizalde",
            Identity::RegularFine => "regular_fine",
            Identity::CountingLemmas => "counting_lemmas",
        }
    }

    /// True when the check is parameterized by a composition rather than
    /// by n alone.
    pub fn takes_lambda(self) -> bool {
        matches!(
            self,
            Identity::Main
                | Identity::NecklaceCount
                | Identity::PrimitiveSymmetry
                | Identity::CycleCount
                | Identity::PpatFibers
                | Identity::RegularFine
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| VerifyError::UnknownIdentity(s.to_string()))
    }
}

fn lambda_params(lam: &Composition) -> BTreeMap<String, String> {
    params(&[("lambda", lam.to_string())])
}

fn n_params(n: usize) -> BTreeMap<String, String> {
    params(&[("n", n.to_string())])
}

fn signed_unit(sum: &mut BigInt, parity: usize) {
    if parity % 2 == 0 {
        *sum += 1;
    } else {
        *sum -= 1;
    }
}

/// Enumerates `C(λ)` and compares the signed descent sum
/// `Σ (-1)^|Des(π)∖S(λ)|` with the closed-form character value.
pub fn verify_main_theorem(lam: &Composition) -> VerificationReport {
    let start = Instant::now();
    let mut sum = BigInt::zero();
    let mut count = 0u64;
    for p in cyclic_lambda_unimodal(lam) {
        signed_unit(&mut sum, descent_excess(&p, lam));
        count += 1;
    }
    VerificationReport::new(
        Identity::Main.name(),
        lambda_params(lam),
        ReportValue::int(&sum),
        ReportValue::int(&chi(lam)),
        count,
        start.elapsed(),
    )
}

/// The single-part special case: over unimodal cycles of length n, the
/// signed descent count sums to the Möbius value `μ(n)`.
pub fn verify_unimodal_mobius(n: usize) -> VerificationReport {
    let start = Instant::now();
    let mut sum = BigInt::zero();
    let mut count = 0u64;
    for p in cyclic_lambda_unimodal(&Composition::single(n)) {
        signed_unit(&mut sum, p.descent_count());
        count += 1;
    }
    VerificationReport::new(
        Identity::UnimodalMobius.name(),
        n_params(n),
        ReportValue::int(&sum),
        ReportValue::int(&mobius(n as u64).expect("n >= 1")),
        count,
        start.elapsed(),
    )
}

fn m_key(m: usize) -> String {
    format!("{m:02}")
}

/// Closed-form `|N_λ^(m)|` against necklace enumeration, for every m.
pub fn verify_necklace_count(lam: &Composition) -> VerificationReport {
    let start = Instant::now();
    let n = lam.n();
    let counts = n_lambda_counts(lam);
    let lhs: Vec<(String, BigInt)> = (0..=n)
        .map(|m| (m_key(m), necklace_class_count(lam, m).expect("m in range")))
        .collect();
    let rhs: Vec<(String, BigInt)> = (0..=n)
        .map(|m| (m_key(m), BigInt::from(counts.total[m])))
        .collect();
    let enumerated: u64 = counts.total.iter().sum();
    VerificationReport::new(
        Identity::NecklaceCount.name(),
        lambda_params(lam),
        ReportValue::histogram(lhs),
        ReportValue::histogram(rhs),
        enumerated,
        start.elapsed(),
    )
}

/// The symmetry `bigL(λ, m) = bigL(λ, n-m)` of primitive class counts,
/// checked pointwise in closed form.
pub fn verify_primitive_symmetry(lam: &Composition) -> VerificationReport {
    let start = Instant::now();
    let n = lam.n();
    let lhs: Vec<(String, BigInt)> = (0..=n)
        .map(|m| (m_key(m), primitive_class_count(lam, m).expect("m in range")))
        .collect();
    let rhs: Vec<(String, BigInt)> = (0..=n)
        .map(|m| {
            (
                m_key(m),
                primitive_class_count(lam, n - m).expect("m in range"),
            )
        })
        .collect();
    VerificationReport::new(
        Identity::PrimitiveSymmetry.name(),
        lambda_params(lam),
        ReportValue::histogram(lhs),
        ReportValue::histogram(rhs),
        (n + 1) as u64,
        start.elapsed(),
    )
}

/// Inversion and round-trip: `a_λ(m)` from the closed form must match the
/// enumerated `|C_λ(m)|`, and `Σ_j C(k,j) a_λ(m-j)` must match the
/// enumerated `|N_λ^(m)|`.
pub fn verify_cycle_count(lam: &Composition) -> VerificationReport {
    let start = Instant::now();
    let n = lam.n();
    let k = lam.k();

    let mut observed_cycles = vec![0u64; n + 1];
    let mut cycle_total = 0u64;
    for p in cyclic_lambda_unimodal(lam) {
        observed_cycles[descent_excess(&p, lam)] += 1;
        cycle_total += 1;
    }
    let necklaces = n_lambda_counts(lam);

    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for m in 0..=n {
        let a_closed = cyclic_class_count(lam, m).expect("m in range");
        let round_trip: BigInt = (0..=k.min(m))
            .map(|j| binomial(k, j as isize) * cyclic_class_count(lam, m - j).expect("in range"))
            .sum();
        lhs.push((format!("a({})", m_key(m)), a_closed));
        lhs.push((format!("N({})", m_key(m)), round_trip));
        rhs.push((format!("a({})", m_key(m)), BigInt::from(observed_cycles[m])));
        rhs.push((format!("N({})", m_key(m)), BigInt::from(necklaces.total[m])));
    }
    let enumerated = cycle_total + necklaces.total.iter().sum::<u64>();
    VerificationReport::new(
        Identity::CycleCount.name(),
        lambda_params(lam),
        ReportValue::histogram(lhs),
        ReportValue::histogram(rhs),
        enumerated,
        start.elapsed(),
    )
}

/// Exhaustive inversion of `ppat`: every member of `N_λ^(m)` must land in
/// `C(λ)`, and over each cycle with excess t the fiber inside `N_λ^(m)`
/// must have exactly `C(k, m-t)` members.
pub fn verify_ppat_fibers(lam: &Composition) -> VerificationReport {
    let start = Instant::now();
    let n = lam.n();
    let k = lam.k();
    let cycles: Vec<Permutation> = cyclic_lambda_unimodal(lam).collect();
    let excesses: Vec<usize> = cycles.iter().map(|p| descent_excess(p, lam)).collect();

    let mut fiber_sizes = vec![vec![0u64; cycles.len()]; n + 1];
    let mut valid_images = 0u64;
    let mut members_total = 0u64;
    for member in enumerate_n_lambda(lam, None) {
        members_total += 1;
        let image = ppat(&member);
        if let Ok(idx) = cycles.binary_search(&image) {
            valid_images += 1;
            fiber_sizes[member.o()][idx] += 1;
        }
    }

    let mut class_count = vec![0u64; n + 1];
    for &t in &excesses {
        class_count[t] += 1;
    }

    let mut lhs = vec![("valid".to_string(), BigInt::from(members_total))];
    let mut rhs = vec![("valid".to_string(), BigInt::from(valid_images))];
    for m in 0..=n {
        for t in 0..=n {
            if class_count[t] == 0 {
                continue;
            }
            let expected_size = if m >= t {
                binomial(k, (m - t) as isize)
            } else {
                BigInt::zero()
            };
            let matching = excesses
                .iter()
                .enumerate()
                .filter(|&(idx, &excess)| {
                    excess == t && BigInt::from(fiber_sizes[m][idx]) == expected_size
                })
                .count() as u64;
            let key = format!("m{}t{}", m_key(m), m_key(t));
            lhs.push((key.clone(), BigInt::from(class_count[t])));
            rhs.push((key, BigInt::from(matching)));
        }
    }
    VerificationReport::new(
        Identity::PpatFibers.name(),
        lambda_params(lam),
        ReportValue::histogram(lhs),
        ReportValue::histogram(rhs),
        members_total,
        start.elapsed(),
    )
}

fn descent_histogram(perms: impl Iterator<Item = Permutation>, n: usize) -> BTreeMap<DescentSet, BigInt> {
    let mut hist: BTreeMap<DescentSet, BigInt> = DescentSet::all_subsets(n)
        .into_iter()
        .map(|d| (d, BigInt::zero()))
        .collect();
    for p in perms {
        *hist.get_mut(&p.descent_set()).expect("descents in range") += 1;
    }
    hist
}

/// Full descent-set histogram of `C_n` against the histogram of the
/// tableau basis of the induced representation, over all subsets.
pub fn verify_equidistribution(n: usize) -> VerificationReport {
    let start = Instant::now();
    let cycles = cyclic_lambda_unimodal(&Composition::ones(n));
    let mut count = 0u64;
    let lhs = descent_histogram(cycles.inspect(|_| count += 1), n);
    let rhs = b_rho_descent_distribution(n);
    VerificationReport::new(
        Identity::Equidistribution.name(),
        n_params(n),
        ReportValue::histogram(lhs),
        ReportValue::histogram(rhs),
        count,
        start.elapsed(),
    )
}

/// For every `D ⊆ [n-2]`: permutations of `S_{n-1}` with descent set D
/// are matched by cycles of `C_n` whose descent set is `D` or
/// `D ∪ {n-1}`.
pub fn verify_elizalde(n: usize) -> VerificationReport {
    assert!(n >= 2, "comparison needs n >= 2");
    let start = Instant::now();
    let mut small_count = 0u64;
    let small = descent_histogram(
        all_permutations(n - 1).inspect(|_| small_count += 1),
        n - 1,
    );
    let cycle_hist = descent_histogram(cyclic_lambda_unimodal(&Composition::ones(n)), n);

    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (d, count) in &small {
        let with_last = d.with_position(n - 1).expect("n-1 is a valid position");
        let combined = &cycle_hist[d] + &cycle_hist[&with_last];
        lhs.push((d.to_string(), count.clone()));
        rhs.push((d.to_string(), combined));
    }
    VerificationReport::new(
        Identity::Elizalde.name(),
        n_params(n),
        ReportValue::histogram(lhs),
        ReportValue::histogram(rhs),
        small_count * 2,
        start.elapsed(),
    )
}

/// Signed descent sum over all λ-unimodal permutations: `n!` when
/// λ = (1^n), otherwise 0.
pub fn verify_regular_fine(lam: &Composition) -> VerificationReport {
    let start = Instant::now();
    let n = lam.n();
    let mut sum = BigInt::zero();
    let mut count = 0u64;
    for p in lambda_unimodal(lam) {
        signed_unit(&mut sum, descent_excess(&p, lam));
        count += 1;
    }
    let rhs = if lam.parts().iter().all(|&p| p == 1) {
        factorial(n)
    } else {
        BigInt::zero()
    };
    VerificationReport::new(
        Identity::RegularFine.name(),
        lambda_params(lam),
        ReportValue::int(&sum),
        ReportValue::int(&rhs),
        count,
        start.elapsed(),
    )
}

/// The sign-reversing involution behind [`verify_regular_fine`]: in the
/// first λ-block of size above 1, swap the positions of the block's two
/// largest values. Keeps λ-unimodality and moves `|Des∖S(λ)|` by one.
pub fn phi_involution(p: &Permutation, lam: &Composition) -> Result<Permutation, VerifyError> {
    if !is_lambda_unimodal(p, lam).map_err(|e| VerifyError::BadInput(e.to_string()))? {
        return Err(VerifyError::BadInput(format!(
            "{p} is not {lam}-unimodal"
        )));
    }
    let block = lam
        .parts()
        .iter()
        .position(|&part| part > 1)
        .ok_or_else(|| VerifyError::BadInput("every part of lambda is 1".to_string()))?;
    let lo: usize = lam.parts()[..block].iter().sum();
    let hi = lo + lam.parts()[block];
    let segment = &p.entries()[lo..hi];
    let mut order: Vec<usize> = (0..segment.len()).collect();
    order.sort_unstable_by_key(|&i| std::cmp::Reverse(segment[i]));
    let (largest, second) = (lo + order[0], lo + order[1]);
    let mut entries = p.entries().to_vec();
    entries.swap(largest, second);
    Ok(Permutation::new(entries).expect("swap preserves bijectivity"))
}

/// One executable unit of the suite: an identity applied to concrete
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Main(Composition),
    UnimodalMobius(usize),
    NecklaceCount(Composition),
    PrimitiveSymmetry(Composition),
    CycleCount(Composition),
    PpatFibers(Composition),
    Equidistribution(usize),
    Elizalde(usize),
    RegularFine(Composition),
    CountingLemmas(LemmaBounds),
}

impl Check {
    pub fn identity(&self) -> Identity {
        match self {
            Check::Main(_) => Identity::Main,
            Check::UnimodalMobius(_) => Identity::UnimodalMobius,
            Check::NecklaceCount(_) => Identity::NecklaceCount,
            Check::PrimitiveSymmetry(_) => Identity::PrimitiveSymmetry,
            Check::CycleCount(_) => Identity::CycleCount,
            Check::PpatFibers(_) => Identity::PpatFibers,
            Check::Equidistribution(_) => Identity::Equidistribution,
            Check::Elizalde(_) => Identity::Elizalde,
            Check::RegularFine(_) => Identity::RegularFine,
            Check::CountingLemmas(_) => Identity::CountingLemmas,
        }
    }

    /// The parameter map that will appear in the report; also usable as a
    /// cache key component.
    pub fn params(&self) -> BTreeMap<String, String> {
        match self {
            Check::Main(lam)
            | Check::NecklaceCount(lam)
            | Check::PrimitiveSymmetry(lam)
            | Check::CycleCount(lam)
            | Check::PpatFibers(lam)
            | Check::RegularFine(lam) => lambda_params(lam),
            Check::UnimodalMobius(n) | Check::Equidistribution(n) | Check::Elizalde(n) => {
                n_params(*n)
            }
            Check::CountingLemmas(bounds) => params(&[
                ("poly_n_max", bounds.poly_n_max.to_string()),
                ("boxes_max", bounds.boxes_max.to_string()),
                ("split_r_max", bounds.split_r_max.to_string()),
            ]),
        }
    }

    pub fn run(&self) -> VerificationReport {
        match self {
            Check::Main(lam) => verify_main_theorem(lam),
            Check::UnimodalMobius(n) => verify_unimodal_mobius(*n),
            Check::NecklaceCount(lam) => verify_necklace_count(lam),
            Check::PrimitiveSymmetry(lam) => verify_primitive_symmetry(lam),
            Check::CycleCount(lam) => verify_cycle_count(lam),
            Check::PpatFibers(lam) => verify_ppat_fibers(lam),
            Check::Equidistribution(n) => verify_equidistribution(*n),
            Check::Elizalde(n) => verify_elizalde(*n),
            Check::RegularFine(lam) => verify_regular_fine(lam),
            Check::CountingLemmas(bounds) => check_counting_lemmas(bounds),
        }
    }
}

/// Expands a selection of identities into the deterministic task list for
/// all sizes up to `n_max`: identities in canonical order, then n
/// ascending, then compositions in lexicographic order.
pub fn plan(n_max: usize, selection: &[Identity]) -> Vec<Check> {
    let mut tasks = Vec::new();
    for identity in Identity::ALL {
        if !selection.contains(&identity) {
            continue;
        }
        match identity {
            Identity::Main => {
                for_lambdas(n_max, &mut tasks, Check::Main);
            }
            Identity::UnimodalMobius => {
                tasks.extend((1..=n_max).map(Check::UnimodalMobius));
            }
            Identity::NecklaceCount => {
                for_lambdas(n_max, &mut tasks, Check::NecklaceCount);
            }
            Identity::PrimitiveSymmetry => {
                for_lambdas(n_max, &mut tasks, Check::PrimitiveSymmetry);
            }
            Identity::CycleCount => {
                for_lambdas(n_max, &mut tasks, Check::CycleCount);
            }
            Identity::PpatFibers => {
                for_lambdas(n_max, &mut tasks, Check::PpatFibers);
            }
            Identity::Equidistribution => {
                tasks.extend((1..=n_max).map(Check::Equidistribution));
            }
            Identity::Elizalde => {
                tasks.extend((2..=n_max).map(Check::Elizalde));
            }
            Identity::RegularFine => {
                for_lambdas(n_max, &mut tasks, Check::RegularFine);
            }
            Identity::CountingLemmas => {
                tasks.push(Check::CountingLemmas(LemmaBounds::default()));
            }
        }
    }
    tasks
}

fn for_lambdas(n_max: usize, tasks: &mut Vec<Check>, make: impl Fn(Composition) -> Check) {
    for n in 1..=n_max {
        for lam in compositions(n) {
            tasks.push(make(lam));
        }
    }
}

/// Tasks for a single composition; only λ-parameterized identities apply.
pub fn plan_for_lambda(lam: &Composition, selection: &[Identity]) -> Result<Vec<Check>, VerifyError> {
    let mut tasks = Vec::new();
    for identity in Identity::ALL {
        if !selection.contains(&identity) {
            continue;
        }
        if !identity.takes_lambda() {
            return Err(VerifyError::BadInput(format!(
                "identity {identity} is not parameterized by a composition"
            )));
        }
        tasks.push(match identity {
            Identity::Main => Check::Main(lam.clone()),
            Identity::NecklaceCount => Check::NecklaceCount(lam.clone()),
            Identity::PrimitiveSymmetry => Check::PrimitiveSymmetry(lam.clone()),
            Identity::CycleCount => Check::CycleCount(lam.clone()),
            Identity::PpatFibers => Check::PpatFibers(lam.clone()),
            Identity::RegularFine => Check::RegularFine(lam.clone()),
            _ => unreachable!("takes_lambda filtered the rest"),
        });
    }
    Ok(tasks)
}

/// Runs every selected identity for all sizes up to `n_max`, in
/// deterministic order.
pub fn verify_suite(n_max: usize, selection: &[Identity]) -> Vec<VerificationReport> {
    plan(n_max, selection).iter().map(Check::run).collect()
}
