//! Integer partitions (Young diagrams), binary-word codings, and the
//! hook-content counting formulas, together with brute-force tableau oracles.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::Error;
use crate::poly::RatPoly;

/// A partition: weakly decreasing positive parts. The empty partition is `[]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from parts, stripping trailing zeros. Rejects increasing runs.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, 1-indexed; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Containment of diagrams: `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Does the diagram fit in a `rows x cols` box?
    pub fn fits_in_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    /// All cells `(i, j)`, 1-indexed.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Hook length of the cell `(i, j)`, 1-indexed.
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let conj = self.conjugate();
        self.part(i) + conj.part(j) - i - j + 1
    }

    /// Comma-separated parts, `-` for the empty partition.
    pub fn display(&self) -> String {
        if self.parts.is_empty() {
            return "-".to_string();
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        strs.join(",")
    }

    /// Parse the `display` format.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(alloc::format!("bad partition part: {tok}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }

    /// All partitions fitting in a `rows x cols` box (lexicographic order).
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, cols: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition {
                parts: acc.iter().copied().take_while(|&p| p > 0).collect(),
            });
            if acc.len() == rows {
                return;
            }
            let max = if acc.is_empty() { cols } else { *acc.last().unwrap() };
            for p in (1..=max).rev() {
                acc.push(p);
                rec(rows, cols, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        let mut acc = Vec::new();
        // Generate with first parts descending so the recursion stays simple,
        // then sort for a stable order.
        rec(rows, cols, &mut acc, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

/// Diagram of a binary word (`0` = up step, `1` = right step): reading the word
/// as a lattice path, the region weakly above the path inside the bounding
/// rectangle, i.e. part `i` counts the right steps whose height from the top is
/// at least `i`.
pub fn word_to_diagram(word: &[u8]) -> Partition {
    let zeros = word.iter().filter(|&&b| b == 0).count() as i64;
    // pathheight of the x-th right step: (1-indexed position) - x = zeros seen so far
    let mut heights = Vec::new();
    let mut seen_zeros = 0i64;
    for &b in word {
        if b == 0 {
            seen_zeros += 1;
        } else {
            heights.push(seen_zeros);
        }
    }
    let mut parts = Vec::new();
    for i in 1..=zeros {
        let li = heights.iter().filter(|&&h| h <= zeros - i).count();
        if li == 0 {
            break;
        }
        parts.push(li);
    }
    Partition { parts }
}

/// Inverse of [`word_to_diagram`]: the unique word with the given numbers of
/// zeros and ones whose diagram is `lambda`. Requires the diagram to fit in the
/// `zeros x ones` box.
pub fn diagram_to_word(lambda: &Partition, zeros: usize, ones: usize) -> Result<Vec<u8>, Error> {
    if !lambda.fits_in_box(zeros, ones) {
        return Err(Error::Invalid(alloc::format!(
            "partition {} does not fit in a {zeros} x {ones} box",
            lambda.display()
        )));
    }
    let conj = lambda.conjugate();
    let mut word = vec![0u8; zeros + ones];
    for x in 1..=ones {
        // The x-th one is preceded by exactly zeros - conj(x) zeros.
        let pos = x + zeros - conj.part(x);
        word[pos - 1] = 1;
    }
    Ok(word)
}

/// The `d`-code of a diagram inside the `d x d` box: `d` zeros and `d` ones.
pub fn d_code(lambda: &Partition, d: usize) -> Result<Vec<u8>, Error> {
    diagram_to_word(lambda, d, d)
}

/// Characteristic word of a subset of `{1, ..., len}`: position `i` holds `0`
/// exactly when `i` is in the set.
pub fn code_of_set(set: &[usize], len: usize) -> Vec<u8> {
    let mut word = vec![1u8; len];
    for &i in set {
        assert!(1 <= i && i <= len, "set element {i} out of range 1..={len}");
        word[i - 1] = 0;
    }
    word
}

/// Diagram encoded by a subset of `{1, ..., len}` via its characteristic word.
pub fn partition_of_set(set: &[usize], len: usize) -> Partition {
    word_to_diagram(&code_of_set(set, len))
}

/// Heights of the lattice path of a word (`0` = up step `+1`, `1` = down step
/// `-1`), including the initial height `0`: the result has `word.len() + 1`
/// entries.
pub fn step_path(word: &[u8]) -> Vec<i64> {
    let mut heights = Vec::with_capacity(word.len() + 1);
    let mut h = 0i64;
    heights.push(h);
    for &b in word {
        h += if b == 0 { 1 } else { -1 };
        heights.push(h);
    }
    heights
}

/// Path of a set `E` in the sense used by the region census: the path of the
/// word `0 c_E 1`, so it has `len + 3` height entries.
pub fn set_path(set: &[usize], len: usize) -> Vec<i64> {
    let mut word = Vec::with_capacity(len + 2);
    word.push(0u8);
    word.extend(code_of_set(set, len));
    word.push(1u8);
    step_path(&word)
}

/// Number of semistandard Young tableaux of shape `lambda` with entries at most
/// `n`, via the hook-content product.
pub fn ssyt_count(lambda: &Partition, n: i64) -> BigInt {
    assert!(n >= 0, "ssyt_count: negative bound {n}");
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        num *= n + j as i64 - i as i64;
        den *= lambda.hook(i, j) as i64;
        if num.is_zero() {
            return BigInt::zero();
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// The hook-content product as a polynomial in the entry bound: evaluating at
/// `m` gives `ssyt_count(lambda, m + shift)`.
pub fn ssyt_poly(lambda: &Partition, shift: i64) -> RatPoly {
    let mut p = RatPoly::one();
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        p = p.mul(&RatPoly::x_plus(BigRational::from_integer(BigInt::from(
            shift + j as i64 - i as i64,
        ))));
        den *= lambda.hook(i, j) as i64;
    }
    p.scale(&BigRational::from_integer(den).recip())
}

/// Number of standard Young tableaux of shape `lambda` (the dimension of the
/// corresponding irreducible symmetric-group representation).
pub fn dim_syt(lambda: &Partition) -> BigInt {
    let mut den = BigInt::one();
    for (i, j) in lambda.cells() {
        den *= lambda.hook(i, j) as i64;
    }
    let num = factorial(lambda.size() as u64);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Brute-force SSYT count: fill cells row by row with weakly increasing rows
/// and strictly increasing columns, entries in `1..=n`. Oracle for
/// [`ssyt_count`]; exponential, keep shapes small.
pub fn ssyt_count_brute(lambda: &Partition, n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    let cells = lambda.cells();
    let cols = lambda.part(1);
    let mut grid = vec![vec![0i64; cols]; lambda.len()];
    fn rec(cells: &[(usize, usize)], idx: usize, n: i64, grid: &mut Vec<Vec<i64>>, count: &mut BigInt) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (i, j) = cells[idx];
        let mut lo = 1;
        if j > 1 {
            lo = lo.max(grid[i - 1][j - 2]);
        }
        if i > 1 {
            lo = lo.max(grid[i - 2][j - 1] + 1);
        }
        for v in lo..=n {
            grid[i - 1][j - 1] = v;
            rec(cells, idx + 1, n, grid, count);
        }
    }
    let mut count = BigInt::zero();
    rec(&cells, 0, n, &mut grid, &mut count);
    count
}

/// Brute-force SYT count (bijective filling). Oracle for [`dim_syt`].
pub fn syt_count_brute(lambda: &Partition) -> BigInt {
    // A standard tableau is an SSYT with entries exactly 1..size, all distinct;
    // count growth sequences of diagrams instead, which is much faster.
    fn rec(rows: &mut Vec<usize>, lambda: &Partition, placed: usize, count: &mut BigInt) {
        if placed == lambda.size() {
            *count += 1;
            return;
        }
        for i in 0..rows.len() {
            let can_grow = rows[i] < lambda.part(i + 1) && (i == 0 || rows[i] < rows[i - 1]);
            if can_grow {
                rows[i] += 1;
                rec(rows, lambda, placed + 1, count);
                rows[i] -= 1;
            }
        }
    }
    let mut rows = vec![0usize; lambda.len()];
    let mut count = BigInt::zero();
    if lambda.is_empty() {
        return BigInt::one();
    }
    rec(&mut rows, lambda, 0, &mut count);
    count
}
