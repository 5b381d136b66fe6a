//! Integer partitions, standard Young tableaux, RSK, Murnaghan–Nakayama
//! character values, and the tableau basis of the induced representation.
//!
//! Tableaux use the English convention: row 1 on top, so "south" means a
//! larger row index. The descent set of a standard tableau collects the
//! entries i whose successor sits strictly below them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::counting::{chi, factorial, ExactInt};
use crate::perm::{Composition, DescentSet, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauxError {
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("shape has size {shape_n} but class has size {class_n}")]
    SizeMismatch { shape_n: usize, class_n: usize },
    #[error("rows do not form a standard tableau: {0}")]
    InvalidTableau(String),
    #[error("cannot parse partition from {text:?}")]
    Parse { text: String },
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauxError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauxError::InvalidPartition);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The same parts as a composition; partitions are nonempty in all
    /// public uses.
    pub fn as_composition(&self) -> Composition {
        Composition::new(self.parts.clone()).expect("partition parts are positive")
    }

    /// Number of standard Young tableaux of this shape, by hook lengths.
    pub fn tableau_count(&self) -> BigInt {
        let mut product = BigInt::from(1);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - 1 - c;
                let leg = self.parts[r + 1..].iter().filter(|&&l| l > c).count();
                product *= BigInt::from(arm + leg + 1);
            }
        }
        factorial(self.n()) / product
    }

    pub fn parse(text: &str) -> Result<Self, TableauxError> {
        let parts: Result<Vec<usize>, _> = text
            .trim()
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect();
        match parts {
            Ok(parts) if !parts.is_empty() => Self::new(parts),
            _ => Err(TableauxError::Parse {
                text: text.to_string(),
            }),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = TableauxError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// All partitions of n, largest-first parts, in descending lexicographic
/// order: `(n), (n-1,1), ..., (1^n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau: rows and columns strictly increasing, entries
/// exactly `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, TableauxError> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() || (r > 0 && rows[r - 1].len() < row.len()) {
                return Err(TableauxError::InvalidTableau("ragged shape".into()));
            }
            for (c, &v) in row.iter().enumerate() {
                let v = v as usize;
                if v == 0 || v > n || seen[v] {
                    return Err(TableauxError::InvalidTableau(format!("bad entry {v}")));
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= row[c] {
                    return Err(TableauxError::InvalidTableau(format!("row {r} not increasing")));
                }
                if r > 0 && rows[r - 1][c] >= row[c] {
                    return Err(TableauxError::InvalidTableau(format!("column {c} not increasing")));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(Vec::len).collect(),
        }
    }

    /// Entries i such that i+1 lies strictly south (in a lower row).
    pub fn descent_set(&self) -> DescentSet {
        let n = self.n();
        let mut row_of = vec![0usize; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        DescentSet::from_positions((1..n).filter(|&i| row_of[i + 1] > row_of[i]))
            .expect("positions below n")
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Enumerates all standard Young tableaux of the given shape by placing
/// `1..n` in order, trying rows top to bottom.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.n();
    let parts = shape.parts();
    let mut fill = vec![0usize; parts.len()];
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fn place(
        v: usize,
        n: usize,
        parts: &[usize],
        fill: &mut [usize],
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if v > n {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let open = fill[r] < parts[r] && (r == 0 || fill[r - 1] > fill[r]);
            if open {
                rows[r].push(v as u8);
                fill[r] += 1;
                place(v + 1, n, parts, fill, rows, out);
                fill[r] -= 1;
                rows[r].pop();
            }
        }
    }
    place(1, n, parts, &mut fill, &mut rows, &mut out);
    out
}

/// Robinson–Schensted row insertion: returns the insertion tableau P and
/// the recording tableau Q. The descent set of the permutation equals the
/// descent set of Q.
pub fn rsk(p: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p_rows: Vec<Vec<u8>> = Vec::new();
    let mut q_rows: Vec<Vec<u8>> = Vec::new();
    for (step, &value) in p.entries().iter().enumerate() {
        let mut carry = value;
        let mut r = 0;
        loop {
            if r == p_rows.len() {
                p_rows.push(vec![carry]);
                q_rows.push(vec![step as u8 + 1]);
                break;
            }
            match p_rows[r].iter().position(|&x| x > carry) {
                None => {
                    p_rows[r].push(carry);
                    q_rows[r].push(step as u8 + 1);
                    break;
                }
                Some(pos) => {
                    std::mem::swap(&mut carry, &mut p_rows[r][pos]);
                    r += 1;
                }
            }
        }
    }
    (
        StandardTableau { rows: p_rows },
        StandardTableau { rows: q_rows },
    )
}

/// Shared memo for Murnaghan–Nakayama values, keyed by shape and the
/// remaining class parts. One instance per computation; not shared across
/// threads.
struct CharCalc {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl CharCalc {
    fn new() -> Self {
        Self {
            memo: HashMap::new(),
        }
    }

    /// Character value by border-strip removal, computed on the beta-set:
    /// removing a strip of size r subtracts r from one first-column hook
    /// length, with sign (-1)^(number of hooks jumped).
    fn value(&mut self, shape: &[usize], class_rest: &[usize]) -> BigInt {
        if class_rest.is_empty() {
            return BigInt::from(1);
        }
        let key = (shape.to_vec(), class_rest.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let r = class_rest[0];
        let len = shape.len();
        let betas: Vec<usize> = shape
            .iter()
            .enumerate()
            .map(|(i, &s)| s + (len - 1 - i))
            .collect();
        let mut total = BigInt::zero();
        for i in 0..len {
            if betas[i] < r {
                continue;
            }
            let target = betas[i] - r;
            if betas.contains(&target) {
                continue;
            }
            let jumps = betas
                .iter()
                .filter(|&&b| b > target && b < betas[i])
                .count();
            let mut new_betas = betas.clone();
            new_betas[i] = target;
            new_betas.sort_unstable_by(|a, b| b.cmp(a));
            let mut new_shape: Vec<usize> = new_betas
                .iter()
                .enumerate()
                .map(|(j, &b)| b - (len - 1 - j))
                .collect();
            while new_shape.last() == Some(&0) {
                new_shape.pop();
            }
            let sub = self.value(&new_shape, &class_rest[1..]);
            if jumps % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// The irreducible character `χ^ν` evaluated on the conjugacy class of
/// cycle type `class_type`, by the Murnaghan–Nakayama recursion.
pub fn mn_character(shape: &Partition, class_type: &Partition) -> Result<ExactInt, TableauxError> {
    if shape.n() != class_type.n() {
        return Err(TableauxError::SizeMismatch {
            shape_n: shape.n(),
            class_n: class_type.n(),
        });
    }
    Ok(CharCalc::new().value(shape.parts(), class_type.parts()))
}

/// Size of the conjugacy class of the given cycle type: `n! / z_λ` with
/// `z_λ = Π i^{m_i} m_i!`.
pub fn class_size(class_type: &Partition) -> ExactInt {
    let n = class_type.n();
    let mut z = BigInt::from(1);
    let mut multiplicity: BTreeMap<usize, u32> = BTreeMap::new();
    for &part in class_type.parts() {
        *multiplicity.entry(part).or_insert(0) += 1;
    }
    for (part, m) in multiplicity {
        z *= BigInt::from(part).pow(m) * factorial(m as usize);
    }
    factorial(n) / z
}

/// Shape multiplicities of the tableau basis of the induced representation:
/// `m_ν = (1/n!) Σ_λ |K_λ| χ_λ χ^ν_λ`, with `χ_λ` the induced-character
/// value from [`chi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisMultiset {
    n: usize,
    multiplicities: BTreeMap<Partition, ExactInt>,
}

impl BasisMultiset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicities(&self) -> &BTreeMap<Partition, ExactInt> {
        &self.multiplicities
    }

    /// Total dimension `Σ m_ν f^ν`.
    pub fn dimension(&self) -> ExactInt {
        self.multiplicities
            .iter()
            .map(|(shape, m)| m * shape.tableau_count())
            .sum()
    }

    /// Descent-set histogram of the basis tableaux, counted with
    /// multiplicity and including every subset of `{1..n-1}`.
    pub fn descent_histogram(&self) -> BTreeMap<DescentSet, ExactInt> {
        let mut hist: BTreeMap<DescentSet, ExactInt> = DescentSet::all_subsets(self.n)
            .into_iter()
            .map(|d| (d, BigInt::zero()))
            .collect();
        for (shape, m) in &self.multiplicities {
            if m.is_zero() {
                continue;
            }
            for tableau in standard_tableaux(shape) {
                *hist
                    .get_mut(&tableau.descent_set())
                    .expect("descents lie in 1..n-1") += m;
            }
        }
        hist
    }
}

/// Decomposes the induced representation into irreducibles via character
/// inner products. Every multiplicity is a nonnegative integer and the
/// dimensions sum to `(n-1)!`.
pub fn rho_multiplicities(n: usize) -> BasisMultiset {
    assert!(n >= 1, "representation is defined for n >= 1");
    let shapes = partitions(n);
    let classes = partitions(n);
    let class_data: Vec<(Partition, BigInt, BigInt)> = classes
        .into_iter()
        .map(|class| {
            let size = class_size(&class);
            let chi_value = chi(&class.as_composition());
            (class, size, chi_value)
        })
        .collect();
    let order = factorial(n);
    let mut calc = CharCalc::new();
    let mut multiplicities = BTreeMap::new();
    for shape in shapes {
        let mut sum = BigInt::zero();
        for (class, size, chi_value) in &class_data {
            if chi_value.is_zero() {
                continue;
            }
            sum += size * chi_value * calc.value(shape.parts(), class.parts());
        }
        debug_assert!((&sum % &order).is_zero(), "inner product must be integral");
        let m = sum / &order;
        debug_assert!(!m.is_negative(), "multiplicities must be nonnegative");
        multiplicities.insert(shape, m);
    }
    BasisMultiset { n, multiplicities }
}

/// Descent-set distribution of the basis `B_ρ`, over all subsets of
/// `{1..n-1}`.
pub fn b_rho_descent_distribution(n: usize) -> BTreeMap<DescentSet, ExactInt> {
    rho_multiplicities(n).descent_histogram()
}
