//! Non-crossing perfect matchings of points on a line (link patterns).
//!
//! Points are 0-indexed internally; the text formats use 1-indexed points. A
//! matching on `2d` points is canonically written as a balanced parenthesis
//! word, opening at the smaller point of each arc.

use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::{word_to_diagram, Partition};
use crate::error::Error;

/// A non-crossing perfect matching on `2d` points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    /// Build from a partner involution (0-indexed), validating that it is a
    /// fixed-point-free non-crossing involution.
    pub fn from_partner(partner: Vec<usize>) -> Result<Self, Error> {
        let n = partner.len();
        if n % 2 != 0 {
            return Err(Error::Invalid("matching needs an even number of points".into()));
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= n || j == i || partner[j] != i {
                return Err(Error::Invalid("partner array is not a fixed-point-free involution".into()));
            }
        }
        // Non-crossing check via the parenthesis stack.
        let mut stack: Vec<usize> = Vec::new();
        for (i, &j) in partner.iter().enumerate() {
            if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return Err(Error::Invalid("matching has crossing arcs".into()));
            }
        }
        Ok(Matching { partner })
    }

    /// Build from 1-indexed arcs covering `1..=points` exactly once.
    pub fn from_arcs(arcs: &[(usize, usize)], points: usize) -> Result<Self, Error> {
        let mut partner = alloc::vec![usize::MAX; points];
        for &(a, b) in arcs {
            if a == 0 || b == 0 || a > points || b > points {
                return Err(Error::Invalid(alloc::format!("arc {a}-{b} out of range 1..={points}")));
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::Invalid("a point appears in two arcs".into()));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.iter().any(|&x| x == usize::MAX) {
            return Err(Error::Invalid("some points are unmatched".into()));
        }
        Matching::from_partner(partner)
    }

    /// Parse a balanced parenthesis word.
    pub fn from_paren_word(s: &str) -> Result<Self, Error> {
        let mut partner = alloc::vec![0usize; s.len()];
        let mut stack = Vec::new();
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '(' => stack.push(i),
                ')' => {
                    let j = stack
                        .pop()
                        .ok_or_else(|| Error::Invalid("unbalanced parenthesis word".into()))?;
                    partner[i] = j;
                    partner[j] = i;
                }
                _ => return Err(Error::Invalid(alloc::format!("bad character {ch:?} in word"))),
            }
        }
        if !stack.is_empty() {
            return Err(Error::Invalid("unbalanced parenthesis word".into()));
        }
        Matching::from_partner(partner)
    }

    /// Parse either a parenthesis word or a 1-indexed arc list like `1-2,3-4`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Invalid("empty matching".into()));
        }
        if s.chars().all(|c| c == '(' || c == ')') {
            return Matching::from_paren_word(s);
        }
        let mut arcs = Vec::new();
        let mut max = 0;
        for tok in s.split(',') {
            let mut it = tok.trim().split('-');
            let a: usize = it
                .next()
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(|| Error::Invalid(alloc::format!("bad arc: {tok}")))?;
            let b: usize = it
                .next()
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(|| Error::Invalid(alloc::format!("bad arc: {tok}")))?;
            if it.next().is_some() {
                return Err(Error::Invalid(alloc::format!("bad arc: {tok}")));
            }
            max = max.max(a).max(b);
            arcs.push((a, b));
        }
        Matching::from_arcs(&arcs, max)
    }

    /// Number of points (`2d`).
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// Number of arcs (`d`).
    pub fn size(&self) -> usize {
        self.partner.len() / 2
    }

    /// Partner of a 0-indexed point.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    /// Arcs as 1-indexed pairs `(min, max)` sorted by the smaller point.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &j) in self.partner.iter().enumerate() {
            if j > i {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    /// Binary word: position `i` holds `0` when the arc opens there.
    pub fn word(&self) -> Vec<u8> {
        self.partner
            .iter()
            .enumerate()
            .map(|(i, &j)| if j > i { 0u8 } else { 1u8 })
            .collect()
    }

    /// Canonical parenthesis word.
    pub fn to_paren_word(&self) -> String {
        self.word().iter().map(|&b| if b == 0 { '(' } else { ')' }).collect()
    }

    /// The Young diagram encoding of the matching.
    pub fn to_partition(&self) -> Partition {
        word_to_diagram(&self.word())
    }

    /// Reverse the point order (`i` becomes `2d - 1 - i`); conjugates the diagram.
    pub fn reversed(&self) -> Matching {
        let n = self.partner.len();
        let partner = (0..n).map(|i| n - 1 - self.partner[n - 1 - i]).collect();
        Matching { partner }
    }

    /// Cyclic rotation sending point `i` to `i + 1` (mod `2d`). The result of
    /// rotating a non-crossing matching is again non-crossing.
    pub fn rotated(&self) -> Matching {
        let n = self.partner.len();
        let mut partner = alloc::vec![0usize; n];
        for i in 0..n {
            partner[(i + 1) % n] = (self.partner[i] + 1) % n;
        }
        Matching { partner }
    }

    /// All non-crossing matchings on `2d` points (Catalan many).
    pub fn enumerate(d: usize) -> Vec<Matching> {
        fn rec(word: &mut Vec<u8>, open: usize, closed: usize, d: usize, out: &mut Vec<Matching>) {
            if word.len() == 2 * d {
                let s: String = word.iter().map(|&b| if b == 0 { '(' } else { ')' }).collect();
                out.push(Matching::from_paren_word(&s).unwrap());
                return;
            }
            if open < d {
                word.push(0);
                rec(word, open + 1, closed, d, out);
                word.pop();
            }
            if closed < open {
                word.push(1);
                rec(word, open, closed + 1, d, out);
                word.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), 0, 0, d, &mut out);
        out
    }
}

/// The matching `X` with `m` nested arches wrapped around it (when `y` is
/// `None`), or the squeezed composition of `X`, `m` parallel arches, and `Y`.
///
/// Abstract point layout, 1-indexed:
///
/// * plain: arch `k = 1..m` joins `m + 1 - k` to `m + 2d + k`, with `X` on
///   points `m + 1 ..= m + 2d`;
/// * squeezed: `X` sits on `1 ..= 2d`, `Y` on `2d + m + 1 ..= 2d + m + 2e`,
///   and arch `k = 1..m` joins `2d + k` to `2(d + m + e) + 1 - k`, so the
///   arches nest around `Y`.
pub fn compose(x: &Matching, m: usize, y: Option<&Matching>) -> Matching {
    let d = x.size();
    match y {
        None => {
            let total = 2 * (d + m);
            let mut partner = alloc::vec![0usize; total];
            for k in 1..=m {
                let a = m - k;
                let b = m + 2 * d + k - 1;
                partner[a] = b;
                partner[b] = a;
            }
            for i in 0..2 * d {
                partner[m + i] = m + x.partner(i);
            }
            Matching { partner }
        }
        Some(y) => {
            let e = y.size();
            let total = 2 * (d + m + e);
            let mut partner = alloc::vec![0usize; total];
            for i in 0..2 * d {
                partner[i] = x.partner(i);
            }
            for k in 1..=m {
                let a = 2 * d + k - 1;
                let b = 2 * (d + m + e) - k;
                partner[a] = b;
                partner[b] = a;
            }
            for i in 0..2 * e {
                partner[2 * d + m + i] = 2 * d + m + y.partner(i);
            }
            Matching { partner }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_formats() {
        let m1 = Matching::parse("(())()").unwrap();
        let m2 = Matching::parse("1-4,2-3,5-6").unwrap();
        assert_eq!(m1, m2);
        assert_eq!(m1.to_paren_word(), "(())()");
        assert_eq!(m1.arcs(), alloc::vec![(1, 4), (2, 3), (5, 6)]);
        assert!(Matching::parse("((").is_err());
        assert!(Matching::parse("1-2,2-3").is_err());
        assert!(Matching::parse("1-3,2-4").is_err()); // crossing
    }

    #[test]
    fn catalan_counts() {
        assert_eq!(Matching::enumerate(1).len(), 1);
        assert_eq!(Matching::enumerate(2).len(), 2);
        assert_eq!(Matching::enumerate(3).len(), 5);
        assert_eq!(Matching::enumerate(4).len(), 14);
    }

    #[test]
    fn diagram_of_matching() {
        use crate::diagram::Partition;
        // ()()() has the staircase-free word 010101 -> diagram (2, 1).
        let x = Matching::parse("()()()").unwrap();
        assert_eq!(x.to_partition(), Partition::new(alloc::vec![2, 1]).unwrap());
        let nested = Matching::parse("((()))").unwrap();
        assert_eq!(nested.to_partition(), Partition::empty());
    }

    #[test]
    fn reversal_conjugates() {
        for d in 1..=4usize {
            for x in Matching::enumerate(d) {
                assert_eq!(x.reversed().to_partition(), x.to_partition().conjugate());
            }
        }
    }

    #[test]
    fn rotation_stays_noncrossing() {
        for x in Matching::enumerate(3) {
            let r = x.rotated();
            assert_eq!(r.size(), 3);
            // validity is checked by from_partner in the constructor used below
            assert!(Matching::from_partner(r.partner.clone()).is_ok());
        }
    }

    #[test]
    fn compose_shapes() {
        // Wrapping with nested arches never changes the diagram.
        for d in 1..=3usize {
            for x in Matching::enumerate(d) {
                for m in 0..=3usize {
                    assert_eq!(compose(&x, m, None).to_partition(), x.to_partition());
                }
            }
        }
        // Frozen squeezed example: d = e = 1, m = 1 gives {1-2, 3-6, 4-5}.
        let arch = Matching::parse("()").unwrap();
        let z = compose(&arch, 1, Some(&arch));
        assert_eq!(z.arcs(), alloc::vec![(1, 2), (3, 6), (4, 5)]);
        assert_eq!(z.to_paren_word(), "()(())");
        assert_eq!(
            z.to_partition(),
            crate::diagram::Partition::new(alloc::vec![1, 1]).unwrap()
        );
    }
}
