//! Fully packed loop (FPL) configurations on the square grid.
//!
//! The grid `Q_n` has `n x n` vertices `(r, c)`, `1`-indexed from the top-left
//! corner. Each vertex is also incident to boundary links; the `4n` links are
//! labelled clockwise:
//!
//! * top side: `1 ..= n`, left to right, link `l` at vertex `(1, l)`;
//! * right side: `n+1 ..= 2n`, top to bottom, link `l` at `(l - n, n)`;
//! * bottom side: `-2n+1 ..= -n`, right to left, link `l` at `(n, -l - n + 1)`;
//! * left side: `-n+1 ..= 0`, bottom to top, link `l` at `(1 - l, 1)`.
//!
//! An FPL configuration occupies every other boundary link (one of the two
//! parity classes of labels) plus a set of internal edges such that every
//! vertex has degree exactly two. Tracing the open paths pairs up the occupied
//! boundary links into a non-crossing matching.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::factorial;
use crate::error::Error;
use crate::matching::{compose, Matching};

/// Hard guard on exhaustive grid enumeration.
pub const MAX_ENUM_N: usize = 8;

/// Which parity class of boundary-link labels is occupied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even labels occupied.
    Even,
    /// Odd labels occupied.
    Odd,
}

impl Parity {
    /// The class occupied by the standard placements on `Q_n` (labels share
    /// the parity of `n`).
    pub fn of_grid(n: usize) -> Parity {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn occupies(self, label: i64) -> bool {
        let even = label.rem_euclid(2) == 0;
        match self {
            Parity::Even => even,
            Parity::Odd => !even,
        }
    }

    pub fn flipped(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Normalize a label into the canonical range `(-2n, 2n]`.
pub fn wrap_label(x: i64, n: usize) -> i64 {
    let n = n as i64;
    (x + 2 * n - 1).rem_euclid(4 * n) - 2 * n + 1
}

/// Grid vertex carrying a boundary link.
pub fn label_vertex(label: i64, n: usize) -> (usize, usize) {
    let ni = n as i64;
    if 1 <= label && label <= ni {
        (1, label as usize)
    } else if ni < label && label <= 2 * ni {
        ((label - ni) as usize, n)
    } else if -2 * ni < label && label <= -ni {
        (n, (-label - ni + 1) as usize)
    } else if -ni < label && label <= 0 {
        ((1 - label) as usize, 1)
    } else {
        panic!("label {label} out of range for n = {n}");
    }
}

/// Clockwise boundary-walk position of a label, in `1 ..= 4n`.
pub fn boundary_pos(label: i64, n: usize) -> i64 {
    if label >= 1 {
        label
    } else {
        label + 4 * n as i64
    }
}

/// An internal grid edge. `H(r, c)` joins `(r, c)` and `(r, c+1)`;
/// `V(r, c)` joins `(r, c)` and `(r+1, c)`. Coordinates are 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Edge {
    H(usize, usize),
    V(usize, usize),
}

fn h_idx(n: usize, r: usize, c: usize) -> u32 {
    ((r - 1) * (n - 1) + (c - 1)) as u32
}

fn v_idx(n: usize, r: usize, c: usize) -> u32 {
    ((r - 1) * n + (c - 1)) as u32
}

/// One complete FPL configuration, as bit masks over internal edges.
#[derive(Debug, Clone, Copy)]
pub struct FplConfig {
    pub n: usize,
    pub parity: Parity,
    h: u64,
    v: u64,
}

impl FplConfig {
    /// Occupancy of the horizontal edge `(r, c)-(r, c+1)`.
    pub fn edge_h(&self, r: usize, c: usize) -> bool {
        debug_assert!(r >= 1 && r <= self.n && c >= 1 && c < self.n);
        self.h >> h_idx(self.n, r, c) & 1 == 1
    }

    /// Occupancy of the vertical edge `(r, c)-(r+1, c)`.
    pub fn edge_v(&self, r: usize, c: usize) -> bool {
        debug_assert!(r >= 1 && r < self.n && c >= 1 && c <= self.n);
        self.v >> v_idx(self.n, r, c) & 1 == 1
    }

    pub fn edge(&self, e: Edge) -> bool {
        match e {
            Edge::H(r, c) => self.edge_h(r, c),
            Edge::V(r, c) => self.edge_v(r, c),
        }
    }

    pub fn masks(&self) -> (u64, u64) {
        (self.h, self.v)
    }

    /// Occupied boundary labels in increasing order.
    pub fn occupied_labels(&self) -> Vec<i64> {
        occupied_labels(self.n, self.parity)
    }

    /// Trace the open paths and return the induced matching on boundary labels.
    pub fn label_matching(&self) -> LabelMatching {
        let n = self.n;
        let labels = self.occupied_labels();
        let mut seen: BTreeSet<i64> = BTreeSet::new();
        let mut pairs = Vec::with_capacity(labels.len() / 2);
        for &start in &labels {
            if seen.contains(&start) {
                continue;
            }
            let end = self.trace_from(start);
            seen.insert(start);
            seen.insert(end);
            pairs.push((start.min(end), start.max(end)));
        }
        pairs.sort_unstable();
        LabelMatching { n, pairs }
    }

    /// Walk from an occupied boundary link to its partner link.
    fn trace_from(&self, start: i64) -> i64 {
        let n = self.n;
        let (mut r, mut c) = label_vertex(start, n);
        // Incoming direction: which of the four incident slots we arrived by.
        // 0 = N, 1 = E, 2 = S, 3 = W, encoded from the vertex's viewpoint.
        let mut came = stub_side(start, n);
        loop {
            let mut next = None;
            for side in 0..4u8 {
                if side == came {
                    continue;
                }
                if self.side_occupied(r, c, side) {
                    next = Some(side);
                    break;
                }
            }
            let side = next.expect("vertex of degree < 2 while tracing");
            match side {
                0 => {
                    // North: internal edge or stub.
                    if r > 1 {
                        r -= 1;
                        came = 2;
                    } else {
                        return c as i64;
                    }
                }
                1 => {
                    if c < n {
                        c += 1;
                        came = 3;
                    } else {
                        return (n + r) as i64;
                    }
                }
                2 => {
                    if r < n {
                        r += 1;
                        came = 0;
                    } else {
                        return 1 - (n as i64) - c as i64;
                    }
                }
                _ => {
                    if c > 1 {
                        c -= 1;
                        came = 1;
                    } else {
                        return 1 - r as i64;
                    }
                }
            }
        }
    }

    /// Occupancy of the N/E/S/W slot at `(r, c)`, counting boundary stubs.
    fn side_occupied(&self, r: usize, c: usize, side: u8) -> bool {
        let n = self.n;
        match side {
            0 => {
                if r > 1 {
                    self.edge_v(r - 1, c)
                } else {
                    self.parity.occupies(c as i64)
                }
            }
            1 => {
                if c < n {
                    self.edge_h(r, c)
                } else {
                    self.parity.occupies((n + r) as i64)
                }
            }
            2 => {
                if r < n {
                    self.edge_v(r, c)
                } else {
                    self.parity.occupies(1 - n as i64 - c as i64)
                }
            }
            _ => {
                if c > 1 {
                    self.edge_h(r, c - 1)
                } else {
                    self.parity.occupies(1 - r as i64)
                }
            }
        }
    }
}

/// Side slot (0 = N, 1 = E, 2 = S, 3 = W) by which the link `label` attaches
/// to its vertex.
fn stub_side(label: i64, n: usize) -> u8 {
    let ni = n as i64;
    if 1 <= label && label <= ni {
        0
    } else if ni < label && label <= 2 * ni {
        1
    } else if -2 * ni < label && label <= -ni {
        2
    } else {
        3
    }
}

/// Occupied boundary labels for the class, in increasing order.
pub fn occupied_labels(n: usize, parity: Parity) -> Vec<i64> {
    let ni = n as i64;
    (1 - 2 * ni..=2 * ni).filter(|&l| parity.occupies(l)).collect()
}

/// Exhaustively enumerate FPL configurations on `Q_n` with the given occupied
/// parity class, invoking the visitor on each. Returns the number visited.
pub fn enumerate_fpl<F: FnMut(&FplConfig)>(
    n: usize,
    parity: Parity,
    visitor: &mut F,
) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::Invalid("grid size must be positive".into()));
    }
    if n > MAX_ENUM_N {
        return Err(Error::TooLarge(alloc::format!(
            "grid enumeration is limited to n <= {MAX_ENUM_N}, got {n}"
        )));
    }
    let mut count = 0u64;
    let mut cfg = FplConfig { n, parity, h: 0, v: 0 };
    enumerate_rec(n, parity, 0, &mut cfg, &mut count, visitor);
    Ok(count)
}

fn enumerate_rec<F: FnMut(&FplConfig)>(
    n: usize,
    parity: Parity,
    pos: usize,
    cfg: &mut FplConfig,
    count: &mut u64,
    visitor: &mut F,
) {
    if pos == n * n {
        *count += 1;
        visitor(cfg);
        return;
    }
    let r = pos / n + 1;
    let c = pos % n + 1;
    // Known occupancy: north and west slots are already decided.
    let mut occ = 0u8;
    if cfg.side_occupied(r, c, 0) {
        occ += 1;
    }
    if cfg.side_occupied(r, c, 3) {
        occ += 1;
    }
    // Fixed contributions from boundary stubs on the east/south sides.
    let mut free: [(bool, u32); 2] = [(false, 0); 2]; // (is_vertical, bit index)
    let mut nfree = 0usize;
    if c < n {
        free[nfree] = (false, h_idx(n, r, c));
        nfree += 1;
    } else if parity.occupies((n + r) as i64) {
        occ += 1;
    }
    if r < n {
        free[nfree] = (true, v_idx(n, r, c));
        nfree += 1;
    } else if parity.occupies(1 - n as i64 - c as i64) {
        occ += 1;
    }
    if occ > 2 {
        return;
    }
    let needed = 2 - occ as usize;
    if needed > nfree {
        return;
    }
    // Choose which free east/south edges to occupy.
    let combos: &[u8] = match (nfree, needed) {
        (0, 0) => &[0b00],
        (1, 0) => &[0b00],
        (1, 1) => &[0b01],
        (2, 0) => &[0b00],
        (2, 1) => &[0b01, 0b10],
        (2, 2) => &[0b11],
        _ => unreachable!(),
    };
    for &mask in combos {
        let mut newh = cfg.h;
        let mut newv = cfg.v;
        for (slot, &(is_v, idx)) in free.iter().enumerate().take(nfree) {
            if mask >> slot & 1 == 1 {
                if is_v {
                    newv |= 1 << idx;
                } else {
                    newh |= 1 << idx;
                }
            }
        }
        let (oldh, oldv) = (cfg.h, cfg.v);
        cfg.h = newh;
        cfg.v = newv;
        enumerate_rec(n, parity, pos + 1, cfg, count, visitor);
        cfg.h = oldh;
        cfg.v = oldv;
    }
}

/// A matching on the occupied boundary labels of `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMatching {
    pub n: usize,
    /// Arcs `(a, b)` with `a < b`, sorted.
    pub pairs: Vec<(i64, i64)>,
}

impl LabelMatching {
    /// Canonical parenthesis word over the occupied labels in increasing order.
    pub fn paren_key(&self) -> String {
        let mut events: Vec<(i64, char)> = Vec::with_capacity(self.pairs.len() * 2);
        for &(a, b) in &self.pairs {
            events.push((a, '('));
            events.push((b, ')'));
        }
        events.sort_unstable();
        events.into_iter().map(|(_, ch)| ch).collect()
    }

    /// The abstract non-crossing matching given by the label order.
    pub fn abstract_matching(&self) -> Result<Matching, Error> {
        Matching::from_paren_word(&self.paren_key())
    }

    /// Reconstruct from a parenthesis key for a given grid and parity.
    pub fn from_paren_key(key: &str, n: usize, parity: Parity) -> Result<Self, Error> {
        let labels = occupied_labels(n, parity);
        if key.len() != labels.len() {
            return Err(Error::Invalid(alloc::format!(
                "key length {} does not match {} occupied labels",
                key.len(),
                labels.len()
            )));
        }
        let m = Matching::from_paren_word(key)?;
        let mut pairs = Vec::with_capacity(labels.len() / 2);
        for (i, j) in m.arcs() {
            pairs.push((labels[i - 1], labels[j - 1]));
        }
        pairs.sort_unstable();
        Ok(LabelMatching { n, pairs })
    }

    /// Rotate every label by one step clockwise (`l` to `l + 1`, wrapped).
    /// Maps one parity class onto the other.
    pub fn rotated(&self) -> LabelMatching {
        let mut pairs: Vec<(i64, i64)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let a2 = wrap_label(a + 1, self.n);
                let b2 = wrap_label(b + 1, self.n);
                (a2.min(b2), a2.max(b2))
            })
            .collect();
        pairs.sort_unstable();
        LabelMatching { n: self.n, pairs }
    }
}

/// Census of one parity class: configuration counts per boundary matching.
#[derive(Debug, Clone)]
pub struct Census {
    pub n: usize,
    pub parity: Parity,
    pub total: u64,
    pub by_matching: BTreeMap<String, u64>,
}

impl Census {
    pub fn count_key(&self, key: &str) -> u64 {
        self.by_matching.get(key).copied().unwrap_or(0)
    }

    pub fn count(&self, m: &LabelMatching) -> u64 {
        self.count_key(&m.paren_key())
    }
}

/// Enumerate `Q_n` and bin the configurations by boundary matching.
pub fn census(n: usize, parity: Parity) -> Result<Census, Error> {
    let mut by_matching: BTreeMap<String, u64> = BTreeMap::new();
    let total = enumerate_fpl(n, parity, &mut |cfg| {
        *by_matching.entry(cfg.label_matching().paren_key()).or_insert(0) += 1;
    })?;
    Ok(Census { n, parity, total, by_matching })
}

/// Number of alternating sign matrices (equals the FPL total of one parity
/// class): `prod_{k=0}^{n-1} (3k+1)! / (n+k)!`.
pub fn asm_count(n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..n as u64 {
        num *= factorial(3 * k + 1);
        den *= factorial(n as u64 + k);
    }
    debug_assert!(num.clone() % den.clone() == BigInt::from(0));
    num / den
}

fn place(abstract_m: &Matching, n: usize, label_of_point: impl Fn(usize) -> i64) -> LabelMatching {
    let mut pairs: Vec<(i64, i64)> = abstract_m
        .arcs()
        .into_iter()
        .map(|(p, q)| {
            let a = label_of_point(p);
            let b = label_of_point(q);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    LabelMatching { n, pairs }
}

/// Placement of `X` plus `m` nested arches on `Q_{d+m}`: `X` occupies the
/// top-side links `n-4d+2, n-4d+4, ..., n` and the arches wrap around the
/// rest of the boundary, nesting around the link opposite the top-right area.
pub fn nested_placement(x: &Matching, m: usize) -> LabelMatching {
    let d = x.size();
    let n = d + m;
    let base = n as i64 - 4 * d as i64 + 2;
    let composed = compose(x, m, None);
    place(&composed, n, |p| {
        wrap_label(base + 2 * (p as i64 - m as i64 - 1), n)
    })
}

/// Placement of `X` across the top-right corner of `Q_{d+m}`: `X` occupies
/// links `n-2d+2, ..., n+2d` and the `m` arches nest around the opposite
/// corner.
pub fn corner_placement(x: &Matching, m: usize) -> LabelMatching {
    let d = x.size();
    let n = d + m;
    let total = 2 * (d + m);
    // X on points 1..2d, arch k joining 2d+k and total+1-k.
    let mut arcs: Vec<(usize, usize)> = x.arcs();
    for k in 1..=m {
        arcs.push((2 * d + k, total + 1 - k));
    }
    let composed = Matching::from_arcs(&arcs, total).expect("corner composition is non-crossing");
    let base = n as i64 - 2 * d as i64 + 2;
    place(&composed, n, |p| wrap_label(base + 2 * (p as i64 - 1), n))
}

/// Placement of `X`, `m` parallel arches, and `Y` at opposite corners of
/// `Q_{d+m+e}`: `X` occupies links `n-4d+2, ..., n` and the arches sweep
/// around to `Y` at the opposite corner.
pub fn squeeze_placement(x: &Matching, m: usize, y: &Matching) -> LabelMatching {
    let d = x.size();
    let e = y.size();
    let n = d + m + e;
    let composed = compose(x, m, Some(y));
    let base = n as i64 - 4 * d as i64 + 2;
    place(&composed, n, |p| wrap_label(base + 2 * (p as i64 - 1), n))
}

/// Vertex at depth `t` behind clockwise boundary position `x` (wrapped into
/// `1..=4n`). Depth `0` is the boundary row/column itself; the parametrization
/// folds around corners, which is exactly the reflection behaviour of the
/// forced-edge lemma.
fn strip_vertex(n: usize, t: i64, x: i64) -> (i64, i64) {
    let ni = n as i64;
    let xm = (x - 1).rem_euclid(4 * ni) + 1;
    if xm <= ni {
        (1 + t, xm)
    } else if xm <= 2 * ni {
        (xm - ni, ni - t)
    } else if xm <= 3 * ni {
        (ni - t, 3 * ni + 1 - xm)
    } else {
        (4 * ni + 1 - xm, 1 + t)
    }
}

/// Forced edges induced by a clockwise stretch of every-other occupied links
/// lying on pairwise distinct loops, spanning boundary positions `a0 ..= b0`
/// (unwrapped, `b0 - a0` even). The forced set is a triangle of
/// boundary-perpendicular edges at alternating positions, one fewer position
/// on each side per depth row.
pub fn forced_triangle(n: usize, a0: i64, b0: i64) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut depth = 1i64;
    while a0 + depth <= b0 - depth {
        let mut x = a0 + depth;
        while x <= b0 - depth {
            let (r1, c1) = strip_vertex(n, depth - 1, x);
            let (r2, c2) = strip_vertex(n, depth, x);
            let ok = r1 >= 1
                && r1 <= n as i64
                && r2 >= 1
                && r2 <= n as i64
                && c1 >= 1
                && c1 <= n as i64
                && c2 >= 1
                && c2 <= n as i64;
            assert!(ok, "forced edge out of grid: ({r1},{c1})-({r2},{c2})");
            let e = if c1 == c2 {
                Edge::V(r1.min(r2) as usize, c1 as usize)
            } else {
                debug_assert_eq!(r1, r2);
                Edge::H(r1 as usize, c1.min(c2) as usize)
            };
            out.push(e);
            x += 2;
        }
        depth += 1;
    }
    out
}

/// Forced edges of the nested placement `X` plus `m` arches on `Q_{d+m}`: the
/// union of the two stretch triangles (left feet up to the first link of `X`,
/// and the last link of `X` around to the right feet).
pub fn fixed_edges_nested(d: usize, m: usize) -> BTreeSet<Edge> {
    let n = (d + m) as i64;
    let di = d as i64;
    let mut out: BTreeSet<Edge> = BTreeSet::new();
    out.extend(forced_triangle(d + m, 3 * n - 2 * di + 2, 5 * n - 4 * di + 2));
    out.extend(forced_triangle(d + m, n, 3 * n - 2 * di));
    out
}

/// Forced edges of the corner placement on `Q_{d+m}`.
pub fn fixed_edges_corner(d: usize, m: usize) -> BTreeSet<Edge> {
    let n = (d + m) as i64;
    let di = d as i64;
    let mut out: BTreeSet<Edge> = BTreeSet::new();
    out.extend(forced_triangle(d + m, 3 * n + 2, 5 * n - 2 * di + 2));
    out.extend(forced_triangle(d + m, n + 2 * di, 3 * n));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn wrap_and_vertices() {
        assert_eq!(wrap_label(13, 3), 1);
        assert_eq!(wrap_label(-6, 3), 6);
        assert_eq!(wrap_label(7, 3), -5);
        assert_eq!(label_vertex(3, 3), (1, 3));
        assert_eq!(label_vertex(5, 3), (2, 3));
        assert_eq!(label_vertex(-3, 3), (3, 1));
        assert_eq!(label_vertex(-5, 3), (3, 3));
        assert_eq!(label_vertex(0, 3), (1, 1));
        assert_eq!(label_vertex(-2, 3), (3, 1));
        assert_eq!(boundary_pos(-5, 3), 7);
        assert_eq!(boundary_pos(12, 3), 12);
    }

    #[test]
    fn totals_match_asm_small() {
        let expect = [1u64, 2, 7, 42, 429];
        for n in 1..=5usize {
            for parity in [Parity::Even, Parity::Odd] {
                let c = census(n, parity).unwrap();
                assert_eq!(c.total, expect[n - 1], "n = {n} {}", parity.name());
            }
            assert_eq!(asm_count(n), BigInt::from(expect[n - 1]));
        }
        assert_eq!(asm_count(8), BigInt::from(10850216u64));
    }

    #[test]
    fn census_q3_by_diagram() {
        // Frozen distribution of Q_3 matchings by diagram (in label order):
        // one matching each with 1, 2, 2, 1, 1 configurations summing to 7.
        let c = census(3, Parity::of_grid(3)).unwrap();
        let mut by_lambda: BTreeMap<String, u64> = BTreeMap::new();
        for (key, count) in &c.by_matching {
            let m = Matching::from_paren_word(key).unwrap();
            *by_lambda.entry(m.to_partition().display()).or_insert(0) += count;
        }
        let got: Vec<(String, u64)> = by_lambda.into_iter().collect();
        let expect = vec![
            ("-".into(), 1u64),
            ("1".into(), 2),
            ("1,1".into(), 1),
            ("2".into(), 1),
            ("2,1".into(), 2),
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn nested_placement_small() {
        // X = single arch, m = 2: Q_3 with X on top links; the matching must be
        // a valid label matching covering the occupied class.
        let x = Matching::parse("()").unwrap();
        let lm = nested_placement(&x, 2);
        assert_eq!(lm.n, 3);
        let mut seen: Vec<i64> = lm.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        seen.sort_unstable();
        assert_eq!(seen, occupied_labels(3, Parity::of_grid(3)));
        // X occupies labels n-4d+2 = 1 and n = 3.
        assert!(lm.pairs.contains(&(1, 3)));
    }

    #[test]
    fn squeeze_placement_frozen() {
        let arch = Matching::parse("()").unwrap();
        let lm = squeeze_placement(&arch, 1, &arch);
        assert_eq!(lm.n, 3);
        // Base label n - 4d + 2 = 1, so points 1..6 map to labels 1,3,5,-5,-3,-1.
        // Arcs {1-2, 3-6, 4-5} become label pairs (1,3), (5,-1), (-5,-3).
        assert_eq!(lm.pairs, vec![(-5, -3), (-1, 5), (1, 3)]);
    }

    #[test]
    fn rotation_is_involutive_after_4n() {
        let x = Matching::parse("(())").unwrap();
        let lm = nested_placement(&x, 3);
        let mut r = lm.clone();
        for _ in 0..4 * lm.n {
            r = r.rotated();
        }
        assert_eq!(r, lm);
    }

    #[test]
    fn q1_single_config() {
        let c = census(1, Parity::of_grid(1)).unwrap();
        assert_eq!(c.total, 1);
        assert_eq!(c.by_matching.len(), 1);
        assert_eq!(c.by_matching.get("()"), Some(&1));
    }

    #[test]
    fn wieland_rotation_preserves_counts_q4() {
        let n = 4usize;
        let even = census(n, Parity::Even).unwrap();
        let odd = census(n, Parity::Odd).unwrap();
        assert_eq!(even.total, odd.total);
        for (key, count) in &even.by_matching {
            let lm = LabelMatching::from_paren_key(key, n, Parity::Even).unwrap();
            let rot = lm.rotated().paren_key();
            assert_eq!(odd.count_key(&rot), *count, "matching {key}");
        }
    }

    #[test]
    fn fixed_edges_are_contained_small() {
        // d = 1, m = 4 on Q_5: every enumerated config with the placed
        // matching contains the predicted forced edges.
        let x = Matching::parse("()").unwrap();
        for (d, m) in [(1usize, 4usize), (1, 3), (2, 3)] {
            let xx = if d == 1 {
                x.clone()
            } else {
                Matching::parse("()()").unwrap()
            };
            let n = d + m;
            let target = nested_placement(&xx, m).paren_key();
            let fixed = fixed_edges_nested(d, m);
            let mut checked = 0u64;
            enumerate_fpl(n, Parity::of_grid(n), &mut |cfg| {
                if cfg.label_matching().paren_key() == target {
                    checked += 1;
                    for &e in &fixed {
                        assert!(cfg.edge(e), "edge {e:?} not occupied (d={d}, m={m})");
                    }
                }
            })
            .unwrap();
            assert!(checked > 0, "no configs matched for d={d}, m={m}");
        }
    }

    #[test]
    fn fixed_edges_corner_contained_small() {
        for (d, m) in [(1usize, 4usize), (2, 4)] {
            let xx = if d == 1 {
                Matching::parse("()").unwrap()
            } else {
                Matching::parse("()()").unwrap()
            };
            let n = d + m;
            let target = corner_placement(&xx, m).paren_key();
            let fixed = fixed_edges_corner(d, m);
            let mut checked = 0u64;
            enumerate_fpl(n, Parity::of_grid(n), &mut |cfg| {
                if cfg.label_matching().paren_key() == target {
                    checked += 1;
                    for &e in &fixed {
                        assert!(cfg.edge(e), "edge {e:?} not occupied (d={d}, m={m})");
                    }
                }
            })
            .unwrap();
            assert!(checked > 0, "no configs matched for d={d}, m={m}");
        }
    }
}
