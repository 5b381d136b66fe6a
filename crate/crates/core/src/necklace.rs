//! Words over a 2k-letter alphabet, necklaces, the sets `N_λ`, and the
//! `ppat` map onto λ-unimodal cyclic permutations.
//!
//! A word belongs to `N_λ` when its letter content pairs up to λ
//! (`a_{2t} + a_{2t+1} = λ_{t+1}`) and the word is primitive, or is the
//! square `q²` of a primitive word with an odd number of odd letters.
//! Ranking the cyclic shifts of such a word under the parity-twisted order
//! `≺` produces a pattern permutation π whose cycle form `(π_1 ... π_n)` is
//! a λ-unimodal cyclic permutation; that assignment is `ppat`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::perm::{
    cycle_to_one_line, is_lambda_unimodal, next_permutation, parse_seq, write_seq, Composition,
    Permutation,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NecklaceError {
    #[error("letter {letter} outside alphabet 0..{alphabet}")]
    LetterOutOfRange { letter: usize, alphabet: usize },
    #[error("word must have at least one letter")]
    Empty,
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("words are over different alphabets (k = {0} vs k = {1})")]
    AlphabetMismatch(usize, usize),
    #[error("word has length {word_len} but composition sums to {comp_n}")]
    SizeMismatch { word_len: usize, comp_n: usize },
    #[error("not a member of N_lambda: {0}")]
    NotMember(MembershipFailure),
    #[error("word has period below half its length; shifts cannot be ranked")]
    Unrankable,
    #[error("permutation is not a lambda-unimodal cycle")]
    NotInCLambda,
    #[error("cannot parse word from {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Why a word fails the `N_λ` membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipFailure {
    /// `a_{2t} + a_{2t+1}` differs from `λ_{t+1}` at the given block.
    ContentMismatch {
        block: usize,
        expected: usize,
        found: usize,
    },
    /// Neither primitive nor the square of a primitive word.
    NotPrimitiveNotSquare,
    /// Equals `q²` for primitive q, but `o(q)` is even.
    SquareWithEvenOddCount,
}

impl fmt::Display for MembershipFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipFailure::ContentMismatch {
                block,
                expected,
                found,
            } => write!(
                f,
                "content of block {block} is {found}, expected lambda part {expected}"
            ),
            MembershipFailure::NotPrimitiveNotSquare => {
                write!(f, "word is imprimitive and not the square of a primitive word")
            }
            MembershipFailure::SquareWithEvenOddCount => {
                write!(f, "word is q^2 for primitive q but o(q) is even")
            }
        }
    }
}

/// A word over the alphabet `{0 .. 2k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u8>,
    k: usize,
}

impl Word {
    pub fn new(letters: Vec<u8>, k: usize) -> Result<Self, NecklaceError> {
        if letters.is_empty() {
            return Err(NecklaceError::Empty);
        }
        if k == 0 || 2 * k > u8::MAX as usize + 1 {
            return Err(NecklaceError::LetterOutOfRange {
                letter: 0,
                alphabet: 2 * k,
            });
        }
        for &l in &letters {
            if l as usize >= 2 * k {
                return Err(NecklaceError::LetterOutOfRange {
                    letter: l as usize,
                    alphabet: 2 * k,
                });
            }
        }
        Ok(Self { letters, k })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Letter counts `a_0, ..., a_{2k-1}`.
    pub fn content(&self) -> Vec<usize> {
        let mut counts = vec![0usize; 2 * self.k];
        for &l in &self.letters {
            counts[l as usize] += 1;
        }
        counts
    }

    /// `o(s)`, the number of odd letters.
    pub fn odd_count(&self) -> usize {
        odd_count_of(&self.letters)
    }

    /// The left shift `Σ(s) = s_2 s_3 ... s_n s_1`.
    pub fn shift(&self) -> Word {
        self.rotated(1)
    }

    /// Left rotation by `r` positions.
    pub fn rotated(&self, r: usize) -> Word {
        let n = self.len();
        let r = r % n;
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[r..]);
        letters.extend_from_slice(&self.letters[..r]);
        Word {
            letters,
            k: self.k,
        }
    }

    /// Smallest period r (dividing n) with `s = q^{n/r}`.
    pub fn minimal_period(&self) -> usize {
        minimal_period_of(&self.letters)
    }

    /// True iff the word is not a proper power of a shorter word.
    pub fn is_primitive(&self) -> bool {
        self.minimal_period() == self.len()
    }

    /// The lexicographically least rotation under ordinary letter order.
    pub fn canonical_rotation(&self) -> Word {
        let n = self.len();
        let mut best = 0usize;
        for r in 1..n {
            if rotation_cmp(&self.letters, r, best) == Ordering::Less {
                best = r;
            }
        }
        self.rotated(best)
    }

    pub fn parse(text: &str, k: usize) -> Result<Self, NecklaceError> {
        let letters = parse_seq(text, "word").map_err(|e| NecklaceError::Parse {
            text: text.to_string(),
            reason: e.to_string(),
        })?;
        Self::new(letters, k)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_seq(f, &self.letters, 2 * self.k <= 10)
    }
}

fn odd_count_of(letters: &[u8]) -> usize {
    letters.iter().filter(|&&l| l % 2 == 1).count()
}

fn minimal_period_of(letters: &[u8]) -> usize {
    let n = letters.len();
    for r in 1..n {
        if n % r == 0 && letters.iter().enumerate().all(|(i, &l)| l == letters[i % r]) {
            return r;
        }
    }
    n
}

/// Compares the rotations of `letters` starting at offsets `a` and `b`.
fn rotation_cmp(letters: &[u8], a: usize, b: usize) -> Ordering {
    let n = letters.len();
    for i in 0..n {
        let la = letters[(a + i) % n];
        let lb = letters[(b + i) % n];
        match la.cmp(&lb) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// True iff the word is the least among its rotations (ordinary order).
fn is_least_rotation(letters: &[u8]) -> bool {
    (1..letters.len()).all(|r| rotation_cmp(letters, 0, r) != Ordering::Less)
}

/// The parity-twisted lexicographic comparison `≺` on equal-length words:
/// at the first disagreement, ordinary order applies when the common prefix
/// holds an even number of odd letters, reversed order when odd.
pub(crate) fn prec_cmp(a: &[u8], b: &[u8]) -> Ordering {
    let mut prefix_odd = false;
    for (&la, &lb) in a.iter().zip(b) {
        if la != lb {
            // even prefix: smaller letter first; odd prefix: larger letter first
            return if (la < lb) != prefix_odd {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        if la % 2 == 1 {
            prefix_odd = !prefix_odd;
        }
    }
    Ordering::Equal
}

/// `s ≺ t`. Equal words are incomparable, so both directions return false.
pub fn precedes(s: &Word, t: &Word) -> Result<bool, NecklaceError> {
    if s.len() != t.len() {
        return Err(NecklaceError::LengthMismatch(s.len(), t.len()));
    }
    if s.k != t.k {
        return Err(NecklaceError::AlphabetMismatch(s.k, t.k));
    }
    Ok(prec_cmp(&s.letters, &t.letters) == Ordering::Less)
}

/// A rotation class of words, keyed by its canonical (lex-least) rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NecklaceClass {
    canonical: Word,
}

impl NecklaceClass {
    pub fn from_word(word: &Word) -> Self {
        Self {
            canonical: word.canonical_rotation(),
        }
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    /// All n rotations of the canonical representative, in shift order.
    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.canonical.len()).map(|r| self.canonical.rotated(r))
    }
}

impl fmt::Display for NecklaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

/// Outcome of the `N_λ` membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member { primitive: bool },
    NotMember(MembershipFailure),
}

/// Classifies a word against `N_λ`: content must pair to λ and the word
/// must be primitive or the square of a primitive word with odd `o(q)`.
pub fn membership(word: &Word, lam: &Composition) -> Result<Membership, NecklaceError> {
    if word.k != lam.k() {
        return Err(NecklaceError::AlphabetMismatch(word.k, lam.k()));
    }
    if word.len() != lam.n() {
        return Err(NecklaceError::SizeMismatch {
            word_len: word.len(),
            comp_n: lam.n(),
        });
    }
    let content = word.content();
    for (t, &part) in lam.parts().iter().enumerate() {
        let found = content[2 * t] + content[2 * t + 1];
        if found != part {
            return Ok(Membership::NotMember(MembershipFailure::ContentMismatch {
                block: t + 1,
                expected: part,
                found,
            }));
        }
    }
    Ok(match period_membership(&word.letters) {
        Some(primitive) => Membership::Member { primitive },
        None => {
            let p = minimal_period_of(&word.letters);
            if 2 * p == word.len() {
                Membership::NotMember(MembershipFailure::SquareWithEvenOddCount)
            } else {
                Membership::NotMember(MembershipFailure::NotPrimitiveNotSquare)
            }
        }
    })
}

/// `Some(primitive)` when the primitivity clause of `N_λ` holds.
fn period_membership(letters: &[u8]) -> Option<bool> {
    let n = letters.len();
    let p = minimal_period_of(letters);
    if p == n {
        Some(true)
    } else if 2 * p == n && odd_count_of(&letters[..p]) % 2 == 1 {
        Some(false)
    } else {
        None
    }
}

/// True iff the word represents an element of `N_λ`.
pub fn in_n_lambda(word: &Word, lam: &Composition) -> Result<bool, NecklaceError> {
    Ok(matches!(membership(word, lam)?, Membership::Member { .. }))
}

/// An element of `N_λ`: a necklace class together with its composition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NLambdaMember {
    necklace: NecklaceClass,
    lam: Composition,
    primitive: bool,
}

impl NLambdaMember {
    pub fn new(word: &Word, lam: &Composition) -> Result<Self, NecklaceError> {
        match membership(word, lam)? {
            Membership::Member { primitive } => Ok(Self {
                necklace: NecklaceClass::from_word(word),
                lam: lam.clone(),
                primitive,
            }),
            Membership::NotMember(failure) => Err(NecklaceError::NotMember(failure)),
        }
    }

    pub fn necklace(&self) -> &NecklaceClass {
        &self.necklace
    }

    pub fn canonical_word(&self) -> &Word {
        self.necklace.canonical()
    }

    pub fn lambda(&self) -> &Composition {
        &self.lam
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// `o(s)` of any representative.
    pub fn o(&self) -> usize {
        self.necklace.canonical().odd_count()
    }
}

impl Serialize for NLambdaMember {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("NLambdaMember", 4)?;
        s.serialize_field("lambda", &self.lam.to_string())?;
        s.serialize_field("word", &self.canonical_word().to_string())?;
        s.serialize_field("primitive", &self.primitive)?;
        s.serialize_field("o", &self.o())?;
        s.end()
    }
}

/// Walks every member of `N_λ` (restricted to `o(s) = m` when given),
/// calling `f` with the canonical letters and the primitivity flag.
///
/// Words are generated content class by content class: within block t the
/// odd letter `2t+1` occurs `i_t` times and the even letter `2t` the
/// remaining `λ_{t+1} - i_t` times. Each candidate arrangement survives only
/// if it is the least rotation of its class, so every class is seen once.
fn for_each_member(lam: &Composition, m: Option<usize>, mut f: impl FnMut(&[u8], bool)) {
    let n = lam.n();
    let parts = lam.parts();
    let k = parts.len();
    let mut odd_counts = vec![0usize; k];
    loop {
        let total_odd: usize = odd_counts.iter().sum();
        if m.map_or(true, |want| want == total_odd) {
            let mut letters = Vec::with_capacity(n);
            for (t, (&part, &odd)) in parts.iter().zip(&odd_counts).enumerate() {
                letters.extend(std::iter::repeat(2 * t as u8).take(part - odd));
                letters.extend(std::iter::repeat(2 * t as u8 + 1).take(odd));
            }
            // letters starts sorted; walk the multiset permutations
            loop {
                if is_least_rotation(&letters) {
                    if let Some(primitive) = period_membership(&letters) {
                        f(&letters, primitive);
                    }
                }
                if !next_permutation(&mut letters) {
                    break;
                }
            }
        }
        // odometer over (i_1, ..., i_k) with 0 <= i_t <= lambda_t
        let mut t = 0;
        loop {
            if t == k {
                return;
            }
            if odd_counts[t] < parts[t] {
                odd_counts[t] += 1;
                break;
            }
            odd_counts[t] = 0;
            t += 1;
        }
    }
}

/// Enumerates `N_λ` (or `N_λ^(m)` when `m` is given), one member per
/// necklace class, sorted by canonical word.
pub fn enumerate_n_lambda(
    lam: &Composition,
    m: Option<usize>,
) -> impl Iterator<Item = NLambdaMember> {
    let mut members: Vec<NLambdaMember> = Vec::new();
    let k = lam.k();
    for_each_member(lam, m, |letters, primitive| {
        members.push(NLambdaMember {
            necklace: NecklaceClass {
                canonical: Word {
                    letters: letters.to_vec(),
                    k,
                },
            },
            lam: lam.clone(),
            primitive,
        });
    });
    members.sort_unstable();
    members.into_iter()
}

/// Class counts of `N_λ^(m)` for m = 0..=n, computed by enumeration without
/// materializing members. Index m of the result also splits into primitive
/// and 2-periodic classes.
pub fn n_lambda_counts(lam: &Composition) -> NLambdaCounts {
    let n = lam.n();
    let mut total = vec![0u64; n + 1];
    let mut primitive = vec![0u64; n + 1];
    for_each_member(lam, None, |letters, is_primitive| {
        let o = odd_count_of(letters);
        total[o] += 1;
        if is_primitive {
            primitive[o] += 1;
        }
    });
    NLambdaCounts { total, primitive }
}

/// Per-`m` class counts produced by [`n_lambda_counts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NLambdaCounts {
    /// `|N_λ^(m)|` at index m.
    pub total: Vec<u64>,
    /// Primitive classes with `o(s) = m` at index m.
    pub primitive: Vec<u64>,
}

/// The pattern permutation of a word: π ranks the shifts
/// `s, Σ(s), ..., Σ^{n-1}(s)` under `≺`. For a 2-periodic word `s = q²`,
/// the tied shifts `Σ^j(s) = Σ^{j+n/2}(s)` are split by the parity of
/// `o(s_1...s_j)`: the earlier shift comes first exactly when that count is
/// even.
pub fn pattern(word: &Word) -> Result<Permutation, NecklaceError> {
    let n = word.len();
    let period = word.minimal_period();
    if period != n && 2 * period != n {
        return Err(NecklaceError::Unrankable);
    }
    let rotations: Vec<Word> = (0..n).map(|r| word.rotated(r)).collect();
    let mut prefix_odd = vec![false; n];
    for i in 1..n {
        prefix_odd[i] = prefix_odd[i - 1] ^ (word.letters[i - 1] % 2 == 1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&i, &j| {
        match prec_cmp(&rotations[i].letters, &rotations[j].letters) {
            Ordering::Equal => {
                // equal shifts are exactly half a turn apart
                let lo = i.min(j);
                let lo_first = !prefix_odd[lo];
                if (i < j) == lo_first {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            ord => ord,
        }
    });
    let mut ranks = vec![0u8; n];
    for (pos, &i) in order.iter().enumerate() {
        ranks[i] = (pos + 1) as u8;
    }
    Ok(Permutation::new(ranks).expect("ranks form a permutation"))
}

/// `PPat_λ`: the λ-unimodal cyclic permutation `(π_1 π_2 ... π_n)` built
/// from the pattern π of the canonical representative. Independent of the
/// representative.
pub fn ppat(member: &NLambdaMember) -> Permutation {
    let pi = pattern(member.canonical_word()).expect("members have rankable periods");
    cycle_to_one_line(pi.entries()).expect("pattern is a permutation")
}

/// All members of `N_λ^(m)` that `ppat` sends to `p`.
///
/// Follows the two-ways-per-block cut: the peak of each unimodal segment of
/// `p` may close the rising run or open the falling run, giving `2^k`
/// candidate words; those with `o(s) = m` form the fiber.
pub fn ppat_preimage(
    p: &Permutation,
    lam: &Composition,
    m: usize,
) -> Result<Vec<NLambdaMember>, NecklaceError> {
    if !p.is_cyclic() || !is_lambda_unimodal(p, lam).map_err(|_| NecklaceError::SizeMismatch {
        word_len: p.n(),
        comp_n: lam.n(),
    })? {
        return Err(NecklaceError::NotInCLambda);
    }
    let n = p.n();
    let k = lam.k();
    let listing = p.cycle_listing();
    let sums = lam.partial_sums();

    // peak position (1-based, absolute) of each lambda-segment of p
    let mut peaks = Vec::with_capacity(k);
    let mut lo = 1usize;
    for &hi in &sums {
        let seg = &p.entries()[lo - 1..hi];
        let peak_rel = seg
            .iter()
            .enumerate()
            .max_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
            .expect("segments are nonempty");
        peaks.push(lo + peak_rel);
        lo = hi + 1;
    }

    let mut fiber: BTreeSet<NLambdaMember> = BTreeSet::new();
    for choice in 0u32..(1u32 << k) {
        // thresholds e_0 <= e_1 <= ... <= e_{2k}; even slots are fixed at the
        // partial sums, odd slot t is the segment peak or one less
        let mut thresholds = Vec::with_capacity(2 * k + 1);
        thresholds.push(0usize);
        for t in 0..k {
            let into_falling_run = choice >> t & 1 == 1;
            thresholds.push(if into_falling_run { peaks[t] - 1 } else { peaks[t] });
            thresholds.push(sums[t]);
        }
        let mut letter_of_value = vec![0u8; n + 1];
        for t in 0..2 * k {
            for v in thresholds[t] + 1..=thresholds[t + 1] {
                letter_of_value[v] = t as u8;
            }
        }
        let letters: Vec<u8> = listing.iter().map(|&v| letter_of_value[v as usize]).collect();
        let word = Word { letters, k };
        let member = NLambdaMember::new(&word, lam)?;
        if member.o() == m {
            fiber.insert(member);
        }
    }
    Ok(fiber.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::compositions;

    fn w(text: &str, k: usize) -> Word {
        Word::parse(text, k).unwrap()
    }

    fn comp(text: &str) -> Composition {
        Composition::parse(text).unwrap()
    }

    #[test]
    fn shift_examples() {
        let s = w("00100011", 1);
        assert_eq!(s.shift().to_string(), "01000110");
        assert_eq!(s.shift().shift().to_string(), "10001100");
        let mut t = s.clone();
        for _ in 0..8 {
            t = t.shift();
        }
        assert_eq!(t, s);
    }

    #[test]
    fn precedes_examples() {
        // first disagreement after prefix 0010 with one odd letter
        assert!(precedes(&w("0010111", 1), &w("0010001", 1)).unwrap());
        assert!(!precedes(&w("0010001", 1), &w("0010111", 1)).unwrap());
        let s = w("0221", 2);
        assert!(!precedes(&s, &s).unwrap());
        assert!(precedes(&w("0100", 2), &w("0200", 2)).unwrap());
        assert!(precedes(&w("01", 1), &w("10", 1)).unwrap());
        assert!(precedes(&w("011", 2), &w("01", 2)).is_err());
    }

    #[test]
    fn precedes_is_a_strict_total_order_small() {
        // exhaustive over all words of length 4 on 4 letters
        let words: Vec<Vec<u8>> = {
            let mut out = Vec::new();
            for a in 0..4u8 {
                for b in 0..4u8 {
                    for c in 0..4u8 {
                        for d in 0..4u8 {
                            out.push(vec![a, b, c, d]);
                        }
                    }
                }
            }
            out
        };
        for x in &words {
            assert_eq!(prec_cmp(x, x), Ordering::Equal);
            for y in &words {
                if x != y {
                    let xy = prec_cmp(x, y);
                    assert_ne!(xy, Ordering::Equal);
                    assert_eq!(prec_cmp(y, x), xy.reverse());
                }
            }
        }
        // transitivity on every distinct triple over length 3, k = 1
        let small: Vec<Vec<u8>> = (0..8u8).map(|m| vec![m >> 2 & 1, m >> 1 & 1, m & 1]).collect();
        for x in &small {
            for y in &small {
                for z in &small {
                    if prec_cmp(x, y) == Ordering::Less && prec_cmp(y, z) == Ordering::Less {
                        assert_eq!(prec_cmp(x, z), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn shift_flips_order_by_first_letter_parity() {
        // whenever s ≺ t with equal first letters, the shifts stay in order
        // for an even first letter and swap for an odd one
        let words: Vec<Vec<u8>> = {
            let mut out = Vec::new();
            for len in 2..=5usize {
                for m in 0..(4usize.pow(len as u32)) {
                    let mut v = Vec::with_capacity(len);
                    let mut m = m;
                    for _ in 0..len {
                        v.push((m % 4) as u8);
                        m /= 4;
                    }
                    out.push(v);
                }
            }
            out
        };
        for x in &words {
            for y in &words {
                if x.len() != y.len() || x[0] != y[0] || x == y {
                    continue;
                }
                if prec_cmp(x, y) != Ordering::Less {
                    continue;
                }
                let sx: Vec<u8> = x[1..].iter().chain(&x[..1]).copied().collect();
                let sy: Vec<u8> = y[1..].iter().chain(&y[..1]).copied().collect();
                let expect = if x[0] % 2 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
                assert_eq!(prec_cmp(&sx, &sy), expect);
            }
        }
    }

    #[test]
    fn primitivity_examples() {
        assert!(w("0221", 2).is_primitive());
        assert!(!w("02210221", 2).is_primitive());
        assert!(w("0", 1).is_primitive());
        assert!(w("1", 1).is_primitive());
        assert_eq!(w("02210221", 2).minimal_period(), 4);
        assert_eq!(w("0000", 1).minimal_period(), 1);
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(w("1101", 1).canonical_rotation().to_string(), "0111");
        assert_eq!(
            w("321132202", 2).canonical_rotation().to_string(),
            "023211322"
        );
        let canon = w("02210221", 2);
        assert_eq!(canon.canonical_rotation(), canon);
    }

    #[test]
    fn membership_examples() {
        assert!(in_n_lambda(&w("00121", 2), &comp("4,1")).unwrap());
        assert!(in_n_lambda(&w("0213302133", 2), &comp("4,6")).unwrap());
        // q^2 with even o(q)
        assert_eq!(
            membership(&w("02220222", 2), &comp("4,4")).unwrap(),
            Membership::NotMember(MembershipFailure::SquareWithEvenOddCount)
        );
        // wrong content
        assert!(matches!(
            membership(&w("00121", 2), &comp("3,2")).unwrap(),
            Membership::NotMember(MembershipFailure::ContentMismatch { .. })
        ));
        // fourth power
        assert_eq!(
            membership(&w("01010101", 1), &comp("8")).unwrap(),
            Membership::NotMember(MembershipFailure::NotPrimitiveNotSquare)
        );
        // the paper's 2-periodic member
        assert!(in_n_lambda(&w("02210221", 2), &comp("4,4")).unwrap());
        assert!(in_n_lambda(&w("00121", 1), &comp("4,1")).is_err());
    }

    #[test]
    fn enumerate_n_lambda_basics() {
        let lam = comp("4,1");
        let all: Vec<NLambdaMember> = enumerate_n_lambda(&lam, None).collect();
        let by_m: usize = (0..=5)
            .map(|m| enumerate_n_lambda(&lam, Some(m)).count())
            .sum();
        assert_eq!(all.len(), by_m);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all
            .iter()
            .any(|mem| mem.canonical_word().to_string() == "00121"));

        let sq = enumerate_n_lambda(&comp("4,4"), Some(2))
            .find(|mem| mem.canonical_word().to_string() == "02210221")
            .expect("02210221 class present");
        assert!(!sq.is_primitive());

        let counts = n_lambda_counts(&lam);
        for m in 0..=5usize {
            assert_eq!(
                counts.total[m] as usize,
                enumerate_n_lambda(&lam, Some(m)).count()
            );
        }
    }

    #[test]
    fn pattern_worked_examples() {
        // primitive representative and a different representative of the
        // same class give different patterns but the same image
        let s = w("321132202", 2);
        assert_eq!(pattern(&s).unwrap().to_string(), "953286417");
        let s2 = w("322023211", 2);
        assert_eq!(pattern(&s2).unwrap().to_string(), "864179532");
        // 2-periodic case
        let q2 = w("02210221", 2);
        assert_eq!(pattern(&q2).unwrap().to_string(), "17532864");
        // unrankable: period 2 out of length 8
        assert!(pattern(&w("01010101", 1)).is_err());
    }

    #[test]
    fn ppat_worked_examples() {
        let lam = comp("3,6");
        let m1 = NLambdaMember::new(&w("321132202", 2), &lam).unwrap();
        assert_eq!(ppat(&m1).to_string(), "782134965");
        let m2 = NLambdaMember::new(&w("322023211", 2), &lam).unwrap();
        assert_eq!(ppat(&m2).to_string(), "782134965");
        let m3 = NLambdaMember::new(&w("02210221", 2), &comp("4,4")).unwrap();
        assert_eq!(ppat(&m3).to_string(), "78213456");
    }

    #[test]
    fn ppat_is_representative_invariant() {
        for lam in compositions(6) {
            for member in enumerate_n_lambda(&lam, None) {
                let image = ppat(&member);
                for rot in member.necklace().rotations() {
                    let pi = pattern(&rot).unwrap();
                    let hat = cycle_to_one_line(pi.entries()).unwrap();
                    assert_eq!(hat, image, "rotation {rot} of {member:?}");
                }
            }
        }
    }

    #[test]
    fn ppat_lands_in_c_lambda() {
        for lam in compositions(6) {
            for member in enumerate_n_lambda(&lam, None) {
                let image = ppat(&member);
                assert!(image.is_cyclic());
                assert!(is_lambda_unimodal(&image, &lam).unwrap());
            }
        }
    }

    #[test]
    fn preimage_worked_example() {
        let lam = comp("3,6");
        let p = Permutation::parse("782134965").unwrap();
        let excess = crate::perm::descent_excess(&p, &lam);
        assert_eq!(excess, 3);
        // fiber sizes over m follow binomial(k, m - excess)
        for (j, expect) in [(0usize, 1usize), (1, 2), (2, 1)] {
            let fiber = ppat_preimage(&p, &lam, excess + j).unwrap();
            assert_eq!(fiber.len(), expect, "m = excess + {j}");
            for member in &fiber {
                assert_eq!(ppat(member), p);
                assert_eq!(member.o(), excess + j);
            }
        }
        assert!(ppat_preimage(&p, &lam, excess + 3).unwrap().is_empty());
        // the paper's representatives appear in the o = excess + 1 fiber
        let fiber = ppat_preimage(&p, &lam, excess + 1).unwrap();
        let canon = w("321132202", 2).canonical_rotation();
        assert!(fiber.iter().any(|mem| *mem.canonical_word() == canon));
    }

    #[test]
    fn preimage_rejects_non_members() {
        let lam = comp("2,1");
        assert_eq!(
            ppat_preimage(&Permutation::identity(3), &lam, 0),
            Err(NecklaceError::NotInCLambda)
        );
    }

    #[test]
    fn preimages_partition_n_lambda() {
        // every member is produced by the preimage of its own image
        for lam in compositions(5) {
            for member in enumerate_n_lambda(&lam, None) {
                let image = ppat(&member);
                let fiber = ppat_preimage(&image, &lam, member.o()).unwrap();
                assert!(
                    fiber.contains(&member),
                    "fiber of {image} at o={} misses {member:?}",
                    member.o()
                );
            }
        }
    }

    #[test]
    fn word_parse_and_display() {
        assert_eq!(w("00121", 2).to_string(), "00121");
        assert!(Word::parse("0051", 2).is_err());
        assert!(Word::parse("", 2).is_err());
        let wide = Word::new(vec![0, 11, 3], 6).unwrap();
        assert_eq!(wide.to_string(), "0,11,3");
        assert_eq!(Word::parse("0,11,3", 6).unwrap(), wide);
    }
}
