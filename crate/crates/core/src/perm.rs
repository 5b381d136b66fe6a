//! Permutations, compositions, descent sets, and λ-unimodality.
//!
//! Permutations are stored in one-line notation over `{1..n}`. A permutation
//! is *cyclic* if its functional digraph is a single n-cycle, and
//! *λ-unimodal* for a composition λ of n if each contiguous segment of
//! length `λ_i` (cut at the partial sums of λ) rises then falls.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("entries are not a bijection on 1..{n}: {reason}")]
    NotABijection { n: usize, reason: String },
    #[error("permutation must have at least one entry")]
    Empty,
    #[error("size mismatch: permutation has {perm_n} entries, composition sums to {comp_n}")]
    SizeMismatch { perm_n: usize, comp_n: usize },
    #[error("element {value} out of range 1..={max}")]
    OutOfRange { value: usize, max: usize },
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("cannot parse {kind} from {text:?}: {reason}")]
    Parse {
        kind: &'static str,
        text: String,
        reason: String,
    },
}

fn parse_error(kind: &'static str, text: &str, reason: impl ToString) -> PermError {
    PermError::Parse {
        kind,
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn new(entries: Vec<u8>) -> Result<Self, PermError> {
        if entries.is_empty() {
            return Err(PermError::Empty);
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n {
                return Err(PermError::NotABijection {
                    n,
                    reason: format!("entry {e} out of range"),
                });
            }
            if seen[e] {
                return Err(PermError::NotABijection {
                    n,
                    reason: format!("entry {e} repeated"),
                });
            }
            seen[e] = true;
        }
        Ok(Self { entries })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n as u8).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Image of `i` under the permutation, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    pub fn descent_set(&self) -> DescentSet {
        let elems = (1..self.n())
            .filter(|&i| self.entries[i - 1] > self.entries[i])
            .map(|i| i as u8)
            .collect();
        DescentSet { elems }
    }

    /// Number of descents.
    pub fn descent_count(&self) -> usize {
        (1..self.n())
            .filter(|&i| self.entries[i - 1] > self.entries[i])
            .count()
    }

    /// True iff the permutation is a single n-cycle. The unique permutation
    /// of `{1}` counts as a 1-cycle.
    pub fn is_cyclic(&self) -> bool {
        let n = self.n();
        let mut seen = 1usize;
        let mut at = self.apply(1);
        while at != 1 {
            seen += 1;
            at = self.apply(at);
        }
        seen == n
    }

    /// The cycle of 1, as a listing `1, p(1), p(p(1)), ...`. Covers all of
    /// `{1..n}` exactly when the permutation is cyclic.
    pub fn cycle_listing(&self) -> Vec<u8> {
        let mut listing = vec![1u8];
        let mut at = self.apply(1);
        while at != 1 {
            listing.push(at as u8);
            at = self.apply(at);
        }
        listing
    }

    pub fn parse(text: &str) -> Result<Self, PermError> {
        let entries = parse_seq(text, "permutation")?;
        Self::new(entries)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.entries, self.n() <= 9)
    }
}

impl FromStr for Permutation {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Digit string when every value fits one digit, comma list otherwise.
pub(crate) fn write_seq(f: &mut fmt::Formatter<'_>, xs: &[u8], compact: bool) -> fmt::Result {
    if compact {
        for &x in xs {
            write!(f, "{x}")?;
        }
        Ok(())
    } else {
        let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub(crate) fn parse_seq(text: &str, kind: &'static str) -> Result<Vec<u8>, PermError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(parse_error(kind, text, "empty input"));
    }
    if text.contains(',') {
        text.split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u8>()
                    .map_err(|e| parse_error(kind, text, e))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| parse_error(kind, text, format!("invalid digit {c:?}")))
            })
            .collect()
    }
}

/// Converts a cycle listing `(c_1 c_2 ... c_n)` covering `{1..n}` to the
/// one-line notation of the cyclic permutation sending `c_j` to `c_{j+1}`.
pub fn cycle_to_one_line(cycle: &[u8]) -> Result<Permutation, PermError> {
    let n = cycle.len();
    if n == 0 {
        return Err(PermError::Empty);
    }
    let mut entries = vec![0u8; n];
    for (j, &c) in cycle.iter().enumerate() {
        let c = c as usize;
        if c == 0 || c > n {
            return Err(PermError::NotABijection {
                n,
                reason: format!("cycle entry {c} out of range"),
            });
        }
        if entries[c - 1] != 0 {
            return Err(PermError::NotABijection {
                n,
                reason: format!("cycle entry {c} repeated"),
            });
        }
        entries[c - 1] = cycle[(j + 1) % n];
    }
    Permutation::new(entries)
}

/// A set of descent positions, a subset of `{1..n-1}` for some n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DescentSet {
    elems: Vec<u8>, // strictly increasing
}

impl DescentSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a set from arbitrary positions; sorts and deduplicates.
    /// Positions must be ≥ 1.
    pub fn from_positions(positions: impl IntoIterator<Item = usize>) -> Result<Self, PermError> {
        let mut elems: Vec<u8> = Vec::new();
        for p in positions {
            if p == 0 || p > u8::MAX as usize {
                return Err(PermError::OutOfRange {
                    value: p,
                    max: u8::MAX as usize,
                });
            }
            elems.push(p as u8);
        }
        elems.sort_unstable();
        elems.dedup();
        Ok(Self { elems })
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.elems.iter().map(|&e| e as usize)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        pos <= u8::MAX as usize && self.elems.binary_search(&(pos as u8)).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.elems.last().map(|&e| e as usize)
    }

    /// Set difference `self ∖ other`.
    pub fn difference(&self, other: &DescentSet) -> DescentSet {
        let elems = self
            .elems
            .iter()
            .copied()
            .filter(|e| other.elems.binary_search(e).is_err())
            .collect();
        DescentSet { elems }
    }

    /// `self ∪ {pos}`.
    pub fn with_position(&self, pos: usize) -> Result<DescentSet, PermError> {
        Self::from_positions(self.elements().chain(std::iter::once(pos)))
    }

    /// All subsets of `{1..n-1}`, sorted.
    pub fn all_subsets(n: usize) -> Vec<DescentSet> {
        assert!(n >= 1 && n <= 33, "subset enumeration needs 1 <= n <= 33");
        let mut out: Vec<DescentSet> = (0u64..(1u64 << (n - 1)))
            .map(|mask| {
                let elems = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).map(|i| i as u8).collect();
                DescentSet { elems }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn parse(text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let positions: Result<Vec<usize>, PermError> = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| parse_error("descent set", text, e))
            })
            .collect();
        Self::from_positions(positions?)
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DescentSet {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// A composition of n: an ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PermError> {
        if parts.is_empty() {
            return Err(PermError::Empty);
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(PermError::ZeroPart);
        }
        Ok(Self { parts })
    }

    /// The composition `(1, 1, ..., 1)` of n.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The composition `(n)` with a single part.
    pub fn single(n: usize) -> Self {
        Self { parts: vec![n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Partial sums `s_1 < s_2 < ... < s_k = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0usize, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// The partial sums strictly below n, i.e. `S(λ) ∩ {1..n-1}`. These are
    /// the only elements of S(λ) that can meet a descent set.
    pub fn inner_sums(&self) -> Vec<usize> {
        let mut sums = self.partial_sums();
        sums.pop();
        sums
    }

    /// gcd of the parts.
    pub fn gcd(&self) -> usize {
        self.parts.iter().fold(0, |g, &p| num_integer::gcd(g, p))
    }

    /// Halves every part, when all parts are even.
    pub fn halved(&self) -> Option<Composition> {
        if self.parts.iter().all(|&p| p % 2 == 0) {
            Some(Composition {
                parts: self.parts.iter().map(|&p| p / 2).collect(),
            })
        } else {
            None
        }
    }

    /// True iff all parts are equal, i.e. λ = (d^k).
    pub fn is_rectangular(&self) -> bool {
        self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn parse(text: &str) -> Result<Self, PermError> {
        let parts: Result<Vec<usize>, PermError> = text
            .trim()
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| parse_error("composition", text, e))
            })
            .collect();
        Self::new(parts?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = PermError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// All compositions of n in lexicographic order by parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            go(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}

/// True iff the entries rise strictly to a peak and then fall strictly.
/// Assumes the entries are distinct.
pub fn is_unimodal<T: Ord>(xs: &[T]) -> bool {
    let mut i = 0;
    while i + 1 < xs.len() && xs[i] < xs[i + 1] {
        i += 1;
    }
    while i + 1 < xs.len() && xs[i] > xs[i + 1] {
        i += 1;
    }
    i + 1 == xs.len() || xs.is_empty()
}

/// True iff every λ-segment of the one-line notation is unimodal.
pub fn is_lambda_unimodal(p: &Permutation, lam: &Composition) -> Result<bool, PermError> {
    if p.n() != lam.n() {
        return Err(PermError::SizeMismatch {
            perm_n: p.n(),
            comp_n: lam.n(),
        });
    }
    Ok(segments_unimodal(p.entries(), lam.parts()))
}

pub(crate) fn segments_unimodal(entries: &[u8], parts: &[usize]) -> bool {
    let mut start = 0;
    for &len in parts {
        if !is_unimodal(&entries[start..start + len]) {
            return false;
        }
        start += len;
    }
    true
}

/// The set-level λ-unimodality test: within every λ-block, the descents of
/// `D` that fall strictly inside the block must form a suffix of the block's
/// interior positions. Agrees with [`is_lambda_unimodal`] on descent sets of
/// permutations.
pub fn is_lambda_unimodal_set(d: &DescentSet, lam: &Composition) -> Result<bool, PermError> {
    let n = lam.n();
    if let Some(max) = d.max() {
        if max >= n {
            return Err(PermError::OutOfRange { value: max, max: n - 1 });
        }
    }
    let mut lo = 1usize; // first interior position of the current block
    for &len in lam.parts() {
        let hi = lo + len - 1; // block's last position; interior descents are in lo..hi
        let mut first_descent = None;
        for pos in lo..hi {
            if d.contains(pos) {
                first_descent = Some(pos);
                break;
            }
        }
        if let Some(first) = first_descent {
            for pos in first..hi {
                if !d.contains(pos) {
                    return Ok(false);
                }
            }
        }
        lo = hi + 1;
    }
    Ok(true)
}

/// `|Des(p) ∖ S(λ)|` without allocating the sets. Assumes matching sizes.
pub fn descent_excess(p: &Permutation, lam: &Composition) -> usize {
    excess_of(p.entries(), &lam.inner_sums())
}

pub(crate) fn excess_of(entries: &[u8], inner_sums: &[usize]) -> usize {
    let mut count = 0;
    let mut cut = 0; // index into inner_sums
    for i in 1..entries.len() {
        while cut < inner_sums.len() && inner_sums[cut] < i {
            cut += 1;
        }
        let at_cut = cut < inner_sums.len() && inner_sums[cut] == i;
        if !at_cut && entries[i - 1] > entries[i] {
            count += 1;
        }
    }
    count
}

/// Lexicographic next permutation in place; false when already the last.
pub(crate) fn next_permutation(xs: &mut [u8]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut state: Option<Vec<u8>> = Some((1..=n as u8).collect());
    std::iter::from_fn(move || {
        let current = state.take()?;
        let result = Permutation {
            entries: current.clone(),
        };
        let mut next = current;
        if next_permutation(&mut next) {
            state = Some(next);
        }
        Some(result)
    })
}

/// Enumerates `C(λ)`, the λ-unimodal cyclic permutations, in lexicographic
/// order of one-line notation.
///
/// Cyclic permutations of `{1..n}` are generated from cycle listings
/// `(1, c_2, ..., c_n)`; each corresponds to exactly one n-cycle.
pub fn cyclic_lambda_unimodal(lam: &Composition) -> impl Iterator<Item = Permutation> {
    let n = lam.n();
    let parts = lam.parts().to_vec();
    let mut found: Vec<Permutation> = Vec::new();
    if n == 1 {
        found.push(Permutation::identity(1));
    } else {
        let mut rest: Vec<u8> = (2..=n as u8).collect();
        let mut entries = vec![0u8; n];
        loop {
            entries[0] = rest[0];
            for j in 0..rest.len() - 1 {
                entries[rest[j] as usize - 1] = rest[j + 1];
            }
            entries[rest[rest.len() - 1] as usize - 1] = 1;
            if segments_unimodal(&entries, &parts) {
                found.push(Permutation {
                    entries: entries.clone(),
                });
            }
            if !next_permutation(&mut rest) {
                break;
            }
        }
        found.sort_unstable();
    }
    found.into_iter()
}

/// Enumerates `U(λ)`, all λ-unimodal permutations, in lexicographic order.
pub fn lambda_unimodal(lam: &Composition) -> impl Iterator<Item = Permutation> {
    let parts = lam.parts().to_vec();
    all_permutations(lam.n()).filter(move |p| segments_unimodal(p.entries(), &parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn c(text: &str) -> Composition {
        Composition::parse(text).unwrap()
    }

    #[test]
    fn descent_set_examples() {
        assert_eq!(p("149753286").descent_set(), DescentSet::parse("3,4,5,6,8").unwrap());
        assert!(Permutation::identity(6).descent_set().is_empty());
        assert_eq!(
            p("54321").descent_set(),
            DescentSet::from_positions(1..=4).unwrap()
        );
    }

    #[test]
    fn descent_set_matches_naive_scan() {
        for perm in all_permutations(6) {
            let naive: Vec<usize> = (1..6)
                .filter(|&i| perm.apply(i) > perm.apply(i + 1))
                .collect();
            let ds = perm.descent_set();
            assert_eq!(ds.elements().collect::<Vec<_>>(), naive);
            assert_eq!(ds.len(), perm.descent_count());
        }
    }

    #[test]
    fn cyclicity_examples() {
        assert!(p("36578124").is_cyclic());
        assert!(!Permutation::identity(2).is_cyclic());
        assert!(!Permutation::identity(5).is_cyclic());
        assert!(p("782134965").is_cyclic());
        assert!(Permutation::identity(1).is_cyclic());
    }

    #[test]
    fn cycle_to_one_line_examples() {
        assert_eq!(cycle_to_one_line(&[1, 3, 5, 8, 4, 7, 2, 6]).unwrap(), p("36578124"));
        assert_eq!(
            cycle_to_one_line(&[9, 5, 3, 2, 8, 6, 4, 1, 7]).unwrap(),
            p("782134965")
        );
        assert_eq!(cycle_to_one_line(&[1]).unwrap(), p("1"));
        assert!(cycle_to_one_line(&[1, 1]).is_err());
        assert!(cycle_to_one_line(&[1, 3]).is_err());
    }

    #[test]
    fn cycle_listing_round_trip() {
        for perm in all_permutations(6).filter(Permutation::is_cyclic) {
            let listing = perm.cycle_listing();
            assert_eq!(listing.len(), 6);
            assert_eq!(cycle_to_one_line(&listing).unwrap(), perm);
        }
    }

    #[test]
    fn unimodal_examples() {
        assert!(is_unimodal(&[3, 6, 7, 8, 4, 1]));
        assert!(is_unimodal(&[1, 2, 3, 4]));
        assert!(is_unimodal(&[4, 3, 2, 1]));
        assert!(!is_unimodal(&[1, 3, 2, 4]));
        assert!(is_unimodal::<u8>(&[]));
        assert!(is_unimodal(&[7]));
    }

    #[test]
    fn lambda_unimodal_examples() {
        let fig = p("149753286");
        assert!(is_lambda_unimodal(&fig, &c("6,3")).unwrap());
        assert!(is_lambda_unimodal(&fig, &c("7,2")).unwrap());
        assert!(is_lambda_unimodal(&fig, &c("6,2,1")).unwrap());
        assert!(!is_lambda_unimodal(&fig, &c("5,4")).unwrap());
        for perm in all_permutations(5) {
            assert!(is_lambda_unimodal(&perm, &Composition::ones(5)).unwrap());
        }
        assert!(is_lambda_unimodal(&p("21"), &c("3")).is_err());
    }

    #[test]
    fn lambda_unimodal_set_examples() {
        assert!(is_lambda_unimodal_set(&DescentSet::empty(), &c("3,2")).unwrap());
        assert!(is_lambda_unimodal_set(&p("149753286").descent_set(), &c("6,3")).unwrap());
        assert!(!is_lambda_unimodal_set(&DescentSet::parse("1").unwrap(), &c("3")).unwrap());
        assert!(is_lambda_unimodal_set(&DescentSet::parse("4").unwrap(), &c("3")).is_err());
    }

    #[test]
    fn set_predicate_agrees_with_segment_test() {
        for n in 1..=6 {
            for lam in compositions(n) {
                for perm in all_permutations(n) {
                    assert_eq!(
                        is_lambda_unimodal(&perm, &lam).unwrap(),
                        is_lambda_unimodal_set(&perm.descent_set(), &lam).unwrap(),
                        "disagree on {perm} with lambda {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn descent_excess_matches_sets() {
        for lam in compositions(6) {
            let s = DescentSet::from_positions(lam.inner_sums()).unwrap();
            for perm in all_permutations(6) {
                assert_eq!(
                    descent_excess(&perm, &lam),
                    perm.descent_set().difference(&s).len()
                );
            }
        }
    }

    #[test]
    fn enumerate_cyclic_examples() {
        let c2: Vec<Permutation> = cyclic_lambda_unimodal(&c("2")).collect();
        assert_eq!(c2, vec![p("21")]);
        let c1: Vec<Permutation> = cyclic_lambda_unimodal(&c("1")).collect();
        assert_eq!(c1, vec![p("1")]);
        let c3: Vec<Permutation> = cyclic_lambda_unimodal(&c("3")).collect();
        assert_eq!(c3, vec![p("231"), p("312")]);
    }

    #[test]
    fn enumerate_cyclic_counts_and_order() {
        for n in 1..=8usize {
            let all: Vec<Permutation> = cyclic_lambda_unimodal(&Composition::ones(n)).collect();
            let expected: usize = (1..n).product();
            assert_eq!(all.len(), expected, "|C_{n}| should be (n-1)!");
            assert!(all.windows(2).all(|w| w[0] < w[1]), "lex order, no dupes");
            assert!(all.iter().all(Permutation::is_cyclic));
        }
        // agrees with filtering S_n directly
        for n in 1..=6usize {
            let via_filter: Vec<Permutation> =
                all_permutations(n).filter(Permutation::is_cyclic).collect();
            let via_listing: Vec<Permutation> =
                cyclic_lambda_unimodal(&Composition::ones(n)).collect();
            assert_eq!(via_filter, via_listing);
        }
    }

    #[test]
    fn unimodal_cycles_subset() {
        let lam = c("8");
        for perm in cyclic_lambda_unimodal(&lam) {
            assert!(perm.is_cyclic());
            assert!(is_unimodal(perm.entries()));
        }
    }

    #[test]
    fn composition_basics() {
        let lam = c("6,3");
        assert_eq!(lam.n(), 9);
        assert_eq!(lam.k(), 2);
        assert_eq!(lam.partial_sums(), vec![6, 9]);
        assert_eq!(lam.inner_sums(), vec![6]);
        assert_eq!(lam.gcd(), 3);
        assert!(!lam.is_rectangular());
        assert_eq!(c("4,2").halved(), Some(c("2,1")));
        assert_eq!(c("4,3").halved(), None);
        assert!(Composition::parse("2,0,1").is_err());
        assert!(Composition::parse("").is_err());
    }

    #[test]
    fn compositions_lex_order() {
        let all = compositions(4);
        let texts: Vec<String> = all.iter().map(|l| l.to_string()).collect();
        assert_eq!(
            texts,
            vec!["1,1,1,1", "1,1,2", "1,2,1", "1,3", "2,1,1", "2,2", "3,1", "4"]
        );
        for n in 1..=10usize {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        for text in ["149753286", "1", "21"] {
            assert_eq!(p(text).to_string(), text);
        }
        let big = Permutation::new((1..=12).rev().collect::<Vec<u8>>()).unwrap();
        let shown = big.to_string();
        assert!(shown.contains(','));
        assert_eq!(Permutation::parse(&shown).unwrap(), big);
        assert_eq!(DescentSet::parse("").unwrap(), DescentSet::empty());
        assert_eq!(DescentSet::parse("3,1").unwrap().to_string(), "1,3");
        assert!(Permutation::parse("1492").is_err());
        assert!(Permutation::parse("10,2").is_err());
    }
}
