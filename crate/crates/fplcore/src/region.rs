//! Exact enumeration of loop configurations in bounded grid regions.
//!
//! The central object is the triangular region that hangs below `2d`
//! consecutive external links of the square grid.  Every configuration of
//! the full grid restricts to a configuration of this triangle in which
//!
//! * the `2d` external links are occupied stubs,
//! * every interior vertex has degree exactly two,
//! * a staggered pattern of boundary edges is forced to be occupied, and
//! * the open paths either connect two stubs (realising one arch of a
//!   matching) or cross the region from the lower-left border to the
//!   lower-right border.
//!
//! The left border is crossed by `2d - 2` candidate vertical edges
//! (slots) `e_1, ..., e_{2d-2}`, numbered from the top; likewise
//! `f_1, ..., f_{2d-2}` on the right.  [`TriangleTables`] counts, for every
//! matching `X` realised by the stub paths, the configurations with a given
//! pair of occupied slot sets; these weights are the coefficients that the
//! closed counting formulas combine with symplectic-style tableau counts.
//!
//! [`triangle_census`] additionally verifies, configuration by
//! configuration, the slice statistics that constrain which slot sets can
//! appear: on each anti-diagonal slice the number of local maxima
//! (respectively minima) plus half the number of transit vertices equals
//! half the gap between the lattice paths of the slot set and of the
//! matching.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagram::{partition_of_set, set_path, ssyt_count, step_path};
use crate::error::Error;
use crate::matching::Matching;

/// Largest half-size `d` accepted by the triangle enumerator.
///
/// The region for `d = 6` has a few hundred edges; beyond that the
/// backtracking search, while correct, stops being interactive.
pub const MAX_TRIANGLE_D: usize = 6;

type Coord = (i64, i64);

/// Terminal reached by walking an open path of occupied edges.
enum PathEnd {
    /// The path leaves the region through the external link with this label.
    Stub(usize),
    /// The path stops at this vertex (a border vertex of free degree).
    Open(usize),
}

/// A planar region with occupancy constraints: interior vertices must have
/// degree exactly two (stubs count towards the degree), `forced` edges are
/// occupied in every configuration, and the remaining edges are free.
struct Region {
    verts: Vec<Coord>,
    index: BTreeMap<Coord, usize>,
    interior: Vec<bool>,
    stub: Vec<Option<usize>>,
    /// Edge endpoints as vertex ids, `a < b` in insertion order of vertices.
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    forced: Vec<usize>,
}

impl Region {
    fn new() -> Self {
        Region {
            verts: Vec::new(),
            index: BTreeMap::new(),
            interior: Vec::new(),
            stub: Vec::new(),
            edges: Vec::new(),
            incident: Vec::new(),
            forced: Vec::new(),
        }
    }

    fn add_vertex(&mut self, v: Coord, interior: bool) -> usize {
        debug_assert!(!self.index.contains_key(&v));
        let id = self.verts.len();
        self.verts.push(v);
        self.index.insert(v, id);
        self.interior.push(interior);
        self.stub.push(None);
        self.incident.push(Vec::new());
        id
    }

    fn vertex(&self, v: Coord) -> usize {
        self.index[&v]
    }

    fn set_stub(&mut self, v: Coord, label: usize) {
        let id = self.vertex(v);
        debug_assert!(self.stub[id].is_none());
        self.stub[id] = Some(label);
    }

    fn add_edge(&mut self, a: Coord, b: Coord) -> usize {
        let (ia, ib) = (self.vertex(a), self.vertex(b));
        let id = self.edges.len();
        self.edges.push((ia, ib));
        self.incident[ia].push(id);
        self.incident[ib].push(id);
        id
    }

    fn force(&mut self, a: Coord, b: Coord) {
        let (ia, ib) = (self.vertex(a), self.vertex(b));
        let id = self
            .edges
            .iter()
            .position(|&(x, y)| (x, y) == (ia, ib) || (x, y) == (ib, ia))
            .expect("forced edge must exist");
        self.forced.push(id);
    }

    fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Visits every admissible 0/1 assignment of the edges.
    fn enumerate(&self, visit: &mut dyn FnMut(&[bool])) {
        let mut state: Vec<Option<bool>> = vec![None; self.edges.len()];
        for &e in &self.forced {
            state[e] = Some(true);
        }
        self.search(&mut state, visit);
    }

    /// Applies degree propagation until a fixpoint, then branches on the
    /// first undecided edge.  `state` is restored before returning.
    fn search(&self, state: &mut Vec<Option<bool>>, visit: &mut dyn FnMut(&[bool])) {
        let mut trail: Vec<usize> = Vec::new();
        let ok = self.propagate(state, &mut trail);
        if ok {
            match state.iter().position(|s| s.is_none()) {
                None => {
                    let full: Vec<bool> = state.iter().map(|s| s.unwrap()).collect();
                    visit(&full);
                }
                Some(e) => {
                    for value in [true, false] {
                        state[e] = Some(value);
                        self.search(state, visit);
                    }
                    state[e] = None;
                }
            }
        }
        for e in trail {
            state[e] = None;
        }
    }

    /// Repeatedly enforces the degree-two constraint at interior vertices.
    /// Newly decided edges are recorded on `trail`; returns `false` on a
    /// contradiction.
    fn propagate(&self, state: &mut [Option<bool>], trail: &mut Vec<usize>) -> bool {
        loop {
            let mut changed = false;
            for v in 0..self.verts.len() {
                if !self.interior[v] {
                    continue;
                }
                let mut occupied = usize::from(self.stub[v].is_some());
                let mut undecided: Vec<usize> = Vec::new();
                for &e in &self.incident[v] {
                    match state[e] {
                        Some(true) => occupied += 1,
                        Some(false) => {}
                        None => undecided.push(e),
                    }
                }
                if occupied > 2 || occupied + undecided.len() < 2 {
                    return false;
                }
                if undecided.is_empty() {
                    if occupied != 2 {
                        return false;
                    }
                    continue;
                }
                if occupied == 2 {
                    for e in undecided {
                        state[e] = Some(false);
                        trail.push(e);
                    }
                    changed = true;
                } else if occupied + undecided.len() == 2 {
                    for e in undecided {
                        state[e] = Some(true);
                        trail.push(e);
                    }
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// Follows the open path that starts at `start` and leaves along
    /// `first`.  Marks traversed edges in `visited`.
    fn walk(&self, state: &[bool], visited: &mut [bool], start: usize, first: usize) -> PathEnd {
        let mut prev = first;
        visited[prev] = true;
        let mut cur = self.other_end(prev, start);
        loop {
            if let Some(label) = self.stub[cur] {
                return PathEnd::Stub(label);
            }
            let mut next = None;
            for &e in &self.incident[cur] {
                if state[e] && e != prev {
                    next = Some(e);
                    break;
                }
            }
            match next {
                None => return PathEnd::Open(cur),
                Some(e) => {
                    visited[e] = true;
                    prev = e;
                    cur = self.other_end(e, cur);
                }
            }
        }
    }
}

/// Which lower border of the triangle a free-degree vertex belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Left,
    Right,
}

/// The triangular region below `2d` external links, with its two rows of
/// candidate border slots.
pub struct TriangleRegion {
    d: usize,
    region: Region,
    /// Edge ids of the left slots `e_1, ..., e_{2d-2}` (top to bottom).
    left_slots: Vec<usize>,
    /// Edge ids of the right slots `f_1, ..., f_{2d-2}` (top to bottom).
    right_slots: Vec<usize>,
    /// Border side of each free-degree vertex.
    side: BTreeMap<usize, Side>,
}

/// One admissible configuration of the triangle, after routing validation.
pub struct TriangleConfig {
    /// The matching realised on the stubs by the closed-in paths.
    pub matching: Matching,
    /// Occupied left slots (subset of `1..=2d-2`, ascending).
    pub e1: Vec<usize>,
    /// Occupied right slots (subset of `1..=2d-2`, ascending).
    pub e2: Vec<usize>,
    /// Number of closed loops in the configuration.
    pub loops: u32,
    occupied: Vec<bool>,
}

impl TriangleRegion {
    /// Builds the region for half-size `d >= 1`.
    ///
    /// Vertices live at `(r, x)` with `1 <= r <= 2d-1` and
    /// `r-1 <= x <= 4d-1-r`; the outermost vertex of each row end is a
    /// free-degree border vertex, all others need degree exactly two.  The
    /// stub of external link `k` sits at `(1, 2k-2)`, and the horizontal
    /// edges `(r, r-1)-(r, r)` and `(r, 4d-2-r)-(r, 4d-1-r)` are occupied
    /// in every configuration.
    pub fn new(d: usize) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::Invalid("triangle region needs d >= 1".into()));
        }
        if d > MAX_TRIANGLE_D {
            return Err(Error::TooLarge(format!(
                "triangle region for d = {d} exceeds the enumeration bound {MAX_TRIANGLE_D}"
            )));
        }
        let di = d as i64;
        let mut region = Region::new();
        let mut side = BTreeMap::new();
        for r in 1..=(2 * di - 1) {
            for x in (r - 1)..=(4 * di - 1 - r) {
                let border = x == r - 1 || x == 4 * di - 1 - r;
                let id = region.add_vertex((r, x), !border);
                if x == r - 1 {
                    side.insert(id, Side::Left);
                } else if x == 4 * di - 1 - r {
                    side.insert(id, Side::Right);
                }
            }
        }
        for k in 1..=(2 * d) {
            region.set_stub((1, 2 * k as i64 - 2), k);
        }
        for r in 1..=(2 * di - 1) {
            for x in (r - 1)..(4 * di - 1 - r) {
                region.add_edge((r, x), (r, x + 1));
            }
        }
        let mut left_slots = Vec::new();
        let mut right_slots = Vec::new();
        for r in 1..(2 * di - 1) {
            for x in r..=(4 * di - 2 - r) {
                let id = region.add_edge((r, x), (r + 1, x));
                if x == r {
                    left_slots.push(id);
                } else if x == 4 * di - 2 - r {
                    right_slots.push(id);
                }
            }
        }
        for r in 1..=(2 * di - 1) {
            region.force((r, r - 1), (r, r));
            region.force((r, 4 * di - 2 - r), (r, 4 * di - 1 - r));
        }
        debug_assert_eq!(left_slots.len(), 2 * d - 2);
        debug_assert_eq!(right_slots.len(), 2 * d - 2);
        Ok(TriangleRegion {
            d,
            region,
            left_slots,
            right_slots,
            side,
        })
    }

    /// Half-size of the region (the stub count is `2d`).
    pub fn d(&self) -> usize {
        self.d
    }

    /// Enumerates all routed configurations of the region.
    pub fn enumerate(&self, visit: &mut dyn FnMut(&TriangleConfig)) {
        self.region.enumerate(&mut |state| {
            if let Some(config) = self.route(state) {
                visit(&config);
            }
        });
    }

    /// Validates the path structure of an edge assignment: stubs must pair
    /// up among themselves (realising a non-crossing matching), remaining
    /// open paths must cross from the left border to the right border, and
    /// no closed loop may appear.  Returns the classified configuration or
    /// `None` when the assignment routes badly.
    fn route(&self, state: &[bool]) -> Option<TriangleConfig> {
        let region = &self.region;
        let mut visited = vec![false; state.len()];
        let points = 2 * self.d;
        let mut partner = vec![0usize; points + 1];

        for id in 0..region.verts.len() {
            let Some(label) = region.stub[id] else {
                continue;
            };
            if partner[label] != 0 {
                continue;
            }
            let first = region.incident[id].iter().copied().find(|&e| state[e])?;
            match region.walk(state, &mut visited, id, first) {
                PathEnd::Stub(other) => {
                    partner[label] = other;
                    partner[other] = label;
                }
                // A stub path may not stop at a border vertex.
                PathEnd::Open(_) => return None,
            }
        }
        let zero_indexed: Vec<usize> = partner[1..].iter().map(|&p| p.checked_sub(1)).collect::<Option<_>>()?;
        let matching = Matching::from_partner(zero_indexed).ok()?;

        // Crossing paths: every remaining open end is a border vertex of
        // degree one, and each such path must join the two borders.
        for id in 0..region.verts.len() {
            if !self.side.contains_key(&id) || region.stub[id].is_some() {
                continue;
            }
            let occupied: Vec<usize> = region.incident[id]
                .iter()
                .copied()
                .filter(|&e| state[e])
                .collect();
            if occupied.len() != 1 || visited[occupied[0]] {
                continue;
            }
            match region.walk(state, &mut visited, id, occupied[0]) {
                PathEnd::Open(end) => {
                    if self.side[&id] == self.side[&end] {
                        return None;
                    }
                }
                PathEnd::Stub(_) => return None,
            }
        }

        // Whatever occupied edges remain untraversed form disjoint closed
        // loops: every open end (stub or free border vertex) has been
        // walked, so the leftover occupied subgraph is two-regular.  Closed
        // loops are legal configuration content, exactly as they are in a
        // full grid configuration.
        let mut loops = 0u32;
        for e in 0..state.len() {
            if !state[e] || visited[e] {
                continue;
            }
            loops += 1;
            visited[e] = true;
            let (home, mut cur) = region.edges[e];
            let mut prev = e;
            while cur != home {
                let next = region
                    .incident[cur]
                    .iter()
                    .copied()
                    .find(|&e2| state[e2] && e2 != prev)?;
                visited[next] = true;
                prev = next;
                cur = region.other_end(next, cur);
            }
        }

        let slot_set = |slots: &[usize]| -> Vec<usize> {
            slots
                .iter()
                .enumerate()
                .filter(|&(_, &e)| state[e])
                .map(|(i, _)| i + 1)
                .collect()
        };
        Some(TriangleConfig {
            matching,
            e1: slot_set(&self.left_slots),
            e2: slot_set(&self.right_slots),
            loops,
            occupied: state.to_vec(),
        })
    }

    /// Renders a configuration as ASCII art, one text row per vertex row
    /// plus one for the vertical edges below it.  Stubs print as their
    /// label modulo 10, other vertices as `+`; occupied edges print as
    /// `--` and `|`.
    pub fn render(&self, config: &TriangleConfig) -> String {
        let region = &self.region;
        let di = self.d as i64;
        let state = &config.occupied;
        let col = |x: i64| (3 * x) as usize;
        let mut out = String::new();
        for r in 1..=(2 * di - 1) {
            let mut line = vec![b' '; col(4 * di - 1 - r) + 1];
            let mut below = vec![b' '; col(4 * di - 1 - r) + 1];
            for x in (r - 1)..=(4 * di - 1 - r) {
                let id = region.vertex((r, x));
                line[col(x)] = match region.stub[id] {
                    Some(k) => b'0' + (k % 10) as u8,
                    None => b'+',
                };
            }
            for (e, &(a, b)) in region.edges.iter().enumerate() {
                if !state[e] {
                    continue;
                }
                let (ra, xa) = region.verts[a];
                let (rb, xb) = region.verts[b];
                if ra == r && rb == r {
                    let x = xa.min(xb);
                    line[col(x) + 1] = b'-';
                    line[col(x) + 2] = b'-';
                } else if ra.min(rb) == r && (ra - rb).abs() == 1 {
                    let x = xa;
                    below[col(x)] = b'|';
                }
            }
            out.push_str(core::str::from_utf8(&line).expect("ascii"));
            out.push('\n');
            if r < 2 * di - 1 {
                out.push_str(core::str::from_utf8(&below).expect("ascii"));
                out.push('\n');
            }
        }
        out
    }

    /// Checks the slice statistics of one configuration; see
    /// [`triangle_census`].
    fn check_census(&self, config: &TriangleConfig) -> Result<(), String> {
        let d = self.d;
        let pi_set = set_path(&config.e1, 2 * d - 2);
        let pi_match = step_path(&config.matching.word());
        for i in 1..=(2 * d - 1) {
            let gap = pi_set[i] - pi_match[i];
            if gap < 0 || gap % 2 != 0 {
                return Err(format!(
                    "slice {i}: slot path lies below the matching path (gap {gap})"
                ));
            }
            let h = gap / 2;
            // Slice s = 2i-1 descends from stub i; slice s = 2i from the
            // vertex right of stub i.
            for (s, want_minima) in [(2 * i as i64 - 1, false), (2 * i as i64, true)] {
                let mut extrema = 0i64;
                let mut transit = 0i64;
                for r in 1..=(i as i64) {
                    let v = (r, s - r);
                    match self.classify(config, s, v)? {
                        SliceType::Maximum => {
                            if !want_minima {
                                extrema += 1;
                            }
                        }
                        SliceType::Minimum => {
                            if want_minima {
                                extrema += 1;
                            }
                        }
                        SliceType::Transit => transit += 1,
                        SliceType::Outgoing => {}
                    }
                }
                if transit % 2 != 0 {
                    return Err(format!("slice s = {s}: odd transit count {transit}"));
                }
                if extrema + transit / 2 != h {
                    return Err(format!(
                        "slice s = {s}: {extrema} extrema + {transit}/2 transits != h = {h} \
                         (matching {}, slots {:?})",
                        config.matching.to_paren_word(),
                        config.e1
                    ));
                }
            }
        }
        Ok(())
    }

    /// Classifies a vertex on the slice `r + x = s` by how its loop
    /// behaves relative to the slice.
    fn classify(&self, config: &TriangleConfig, s: i64, v: Coord) -> Result<SliceType, String> {
        let region = &self.region;
        let id = region.vertex(v);
        let state = &config.occupied;
        let mut above: Vec<usize> = Vec::new();
        let mut below: Vec<usize> = Vec::new();
        for &e in &region.incident[id] {
            if !state[e] {
                continue;
            }
            let w = region.other_end(e, id);
            let (r, x) = region.verts[w];
            if r + x == s + 1 {
                above.push(e);
            } else {
                debug_assert_eq!(r + x, s - 1);
                below.push(e);
            }
        }
        let has_stub = region.stub[id].is_some();
        match (above.len(), below.len() + usize::from(has_stub)) {
            (2, 0) => Ok(SliceType::Maximum),
            (0, 2) => Ok(SliceType::Minimum),
            (1, 0) => Ok(SliceType::Outgoing),
            (1, 1) => {
                if has_stub {
                    Ok(self.stub_type(config, s, region.stub[id].unwrap()))
                } else {
                    self.walk_below(config, s, id, below[0])
                }
            }
            other => Err(format!("vertex {v:?}: unexpected degree split {other:?}")),
        }
    }

    /// Type of a slice vertex whose downward connection is its own stub:
    /// the loop continues along the external arch to the partner link.
    fn stub_type(&self, config: &TriangleConfig, s: i64, label: usize) -> SliceType {
        let partner = config.matching.partner(label - 1) + 1;
        if 2 * partner as i64 - 1 > s {
            SliceType::Outgoing
        } else {
            SliceType::Transit
        }
    }

    /// Follows the loop downwards from slice `s` until it either leaves the
    /// region (through a border vertex or an external arch ending above the
    /// slice) or climbs back above the slice.
    fn walk_below(
        &self,
        config: &TriangleConfig,
        s: i64,
        start: usize,
        first: usize,
    ) -> Result<SliceType, String> {
        let region = &self.region;
        let state = &config.occupied;
        let mut prev = first;
        let mut cur = region.other_end(prev, start);
        for _ in 0..=state.len() {
            if let Some(label) = region.stub[cur] {
                return Ok(self.stub_type(config, s, label));
            }
            let mut next = None;
            for &e in &region.incident[cur] {
                if state[e] && e != prev {
                    next = Some(e);
                    break;
                }
            }
            let Some(e) = next else {
                // Left the region through a free border vertex.
                return Ok(SliceType::Outgoing);
            };
            let nxt = region.other_end(e, cur);
            let (cr, cx) = region.verts[cur];
            let (nr, nx) = region.verts[nxt];
            if cr + cx == s && nr + nx == s + 1 {
                return Ok(SliceType::Transit);
            }
            prev = e;
            cur = nxt;
        }
        Err("loop walk did not terminate".into())
    }
}

/// Local behaviour of a loop at a slice vertex.
enum SliceType {
    /// Both loop edges point above the slice.
    Maximum,
    /// Both loop edges point below the slice.
    Minimum,
    /// The loop dives below the slice and comes back up (or ends at an
    /// external link whose partner is not above the slice).
    Transit,
    /// The loop dives below the slice and leaves the region.
    Outgoing,
}

/// Configuration counts of a triangle region, bucketed by the realised
/// matching and the two occupied slot sets.
pub struct TriangleTables {
    d: usize,
    counts: BTreeMap<(String, Vec<usize>, Vec<usize>), u64>,
}

impl TriangleTables {
    /// Enumerates the triangle of half-size `d` once and tabulates all
    /// configuration counts.
    pub fn build(d: usize) -> Result<Self, Error> {
        let triangle = TriangleRegion::new(d)?;
        let mut counts = BTreeMap::new();
        triangle.enumerate(&mut |config: &TriangleConfig| {
            let key = (
                config.matching.to_paren_word(),
                config.e1.clone(),
                config.e2.clone(),
            );
            *counts.entry(key).or_insert(0u64) += 1;
        });
        Ok(TriangleTables { d, counts })
    }

    /// Half-size the tables were built for.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of configurations that realise `x` on the stubs and occupy
    /// exactly the left slots `e1` and right slots `e2`.
    pub fn a_double(&self, x: &Matching, e1: &[usize], e2: &[usize]) -> u64 {
        let key = (x.to_paren_word(), e1.to_vec(), e2.to_vec());
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Weight of the left slot set `e` for the matching `x`: the sum over
    /// right slot sets `E_2` of size `d - 1` of `a_double(x, e, E_2)` times
    /// the number of column-strict tableaux of shape `lambda(E_2)` with
    /// entries `<= d`.
    ///
    /// Slot sets of any other size are admissible fillings of the triangle
    /// in isolation, but cannot be extended past the border (the staggered
    /// region beyond it only supports `d - 1` crossing strands), so they
    /// contribute nothing.
    pub fn a_single(&self, x: &Matching, e: &[usize]) -> BigInt {
        let word = x.to_paren_word();
        let mut total = BigInt::zero();
        for ((w, e1, e2), &count) in &self.counts {
            if *w == word && e1 == e && e2.len() == self.d - 1 {
                let shape = partition_of_set(e2, 2 * self.d - 2);
                total += BigInt::from(count) * ssyt_count(&shape, self.d as i64);
            }
        }
        total
    }

    /// All `(matching, E1, E2, count)` rows, for inspection and reporting.
    pub fn rows(&self) -> Vec<(Matching, Vec<usize>, Vec<usize>, u64)> {
        self.counts
            .iter()
            .map(|((w, e1, e2), &c)| {
                let m = Matching::from_paren_word(w).expect("stored keys are valid");
                (m, e1.clone(), e2.clone(), c)
            })
            .collect()
    }
}

/// Per-matching tabulation of the triangle census, with every
/// configuration checked against the slice statistics.
pub struct TriangleCensus {
    /// Half-size of the region.
    pub d: usize,
    /// Total number of routed configurations.
    pub configs: u64,
    /// `(matching word, E1) -> (E2 -> count)`.
    pub table: BTreeMap<(String, Vec<usize>), BTreeMap<Vec<usize>, u64>>,
}

/// Enumerates the triangle of half-size `d`, verifying the slice
/// statistics of every routed configuration.
///
/// For each slice `i` the quantity `h_i` is half the gap between the
/// lattice path of the occupied left slot set and the lattice path of the
/// realised matching; the census asserts that on the lower anti-diagonal
/// of slice `i` the maxima (and on the upper anti-diagonal the minima)
/// together with half the transit vertices account exactly for `h_i`.
/// Violations are reported as [`Error::Invalid`].
pub fn triangle_census(d: usize) -> Result<TriangleCensus, Error> {
    let triangle = TriangleRegion::new(d)?;
    let mut configs = 0u64;
    let mut table: BTreeMap<(String, Vec<usize>), BTreeMap<Vec<usize>, u64>> = BTreeMap::new();
    let mut violation: Option<String> = None;
    triangle.enumerate(&mut |config: &TriangleConfig| {
        configs += 1;
        if violation.is_none() {
            if let Err(msg) = triangle.check_census(config) {
                violation = Some(msg);
            }
        }
        *table
            .entry((config.matching.to_paren_word(), config.e1.clone()))
            .or_default()
            .entry(config.e2.clone())
            .or_insert(0) += 1;
    });
    match violation {
        Some(msg) => Err(Error::Invalid(msg)),
        None => Ok(TriangleCensus { d, configs, table }),
    }
}

/// Crossings of the cut that separates the corner wedge from the rest of
/// the grid, listed by their position along the staircase border.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum CutRole {
    /// Horizontal out of the left border vertex `(r, r)`, `1 <= r <= d`.
    /// Crossed by every configuration.
    Left(usize),
    /// Vertical below the top-left vertex `(1, 1)`. Always crossed.
    TopLeft,
    /// Optional vertical `e_i` below the diagonal vertex `(i + 1, i + 1)`.
    SlotE(usize),
    /// Optional vertical `g` below the junction vertex `(d, d)`.
    SlotG,
    /// Vertical into the cusp `(r + 1, r + 1)`, `d <= r <= 2d - 2`.
    /// Always crossed.
    Cusp(usize),
    /// Optional horizontal `h_j` out of the cusp `(d + j, d + j)`.
    SlotH(usize),
}

/// The wedge-shaped region behind the `2d` external links that carry a
/// matching under a corner placement: rows `1..=2d` of the triangle
/// `r <= u <= 2d` in local coordinates, minus the `d - 1` cusp vertices
/// `(r, r)` with `d < r < 2d`. Strands enter through the links (top and
/// right side of the corner, alternating) and leave through the cut along
/// the inner staircase border.
///
/// Every filling crosses the cut at the `d` left-border horizontals, the
/// vertical below `(1, 1)` and the `d - 1` verticals into the cusps; the
/// `2d - 2` optional slots (`e_1..e_{d-2}` below the diagonal, the
/// junction vertical `g`, and the horizontals `h_1..h_{d-1}` out of the
/// cusps) are fixed on or off by the interface pair, and the counted
/// fillings are those that route the entering strands into the matching
/// `x` once the forced exterior of the grid is taken into account.
struct CornerWedge {
    d: usize,
    region: Region,
    /// Roles of the phantom stubs, in label order starting at `2d + 1`.
    roles: Vec<CutRole>,
    e_on: Vec<bool>,
    h_on: Vec<bool>,
    g_on: bool,
}

impl CornerWedge {
    fn new(d: usize, e_on: &[bool], h_on: &[bool], g_on: bool) -> Self {
        debug_assert!(d >= 2);
        debug_assert_eq!(e_on.len(), d - 2);
        debug_assert_eq!(h_on.len(), d - 1);
        let di = d as i64;
        let in_wedge = |r: i64, u: i64| -> bool {
            r >= 1 && r <= 2 * di && u >= r && u <= 2 * di && !(u == r && r > di && r < 2 * di)
        };
        let mut region = Region::new();
        for r in 1..=2 * di {
            for u in r..=2 * di {
                if in_wedge(r, u) {
                    region.add_vertex((r, u), true);
                }
            }
        }
        for p in 1..=di {
            region.set_stub((1, 2 * p), p as usize);
        }
        for k in 1..=di {
            region.set_stub((2 * k, 2 * di), (di + k) as usize);
        }
        for r in 1..=2 * di {
            for u in r..=2 * di {
                if !in_wedge(r, u) {
                    continue;
                }
                if u < 2 * di && in_wedge(r, u + 1) {
                    region.add_edge((r, u), (r, u + 1));
                }
                if in_wedge(r + 1, u) {
                    region.add_edge((r, u), (r + 1, u));
                }
            }
        }
        let mut roles: Vec<CutRole> = Vec::new();
        let mut cut = |region: &mut Region, roles: &mut Vec<CutRole>, at: (i64, i64), role: CutRole| {
            let label = 2 * d + 1 + roles.len();
            let phantom = (-1 - roles.len() as i64, 0);
            region.add_vertex(phantom, false);
            region.set_stub(phantom, label);
            region.add_edge(at, phantom);
            region.force(at, phantom);
            roles.push(role);
        };
        for r in 1..=d {
            cut(&mut region, &mut roles, (r as i64, r as i64), CutRole::Left(r));
        }
        cut(&mut region, &mut roles, (1, 1), CutRole::TopLeft);
        for i in 1..=d - 2 {
            if e_on[i - 1] {
                let v = (i as i64 + 1, i as i64 + 1);
                cut(&mut region, &mut roles, v, CutRole::SlotE(i));
            }
        }
        if g_on {
            cut(&mut region, &mut roles, (di, di), CutRole::SlotG);
        }
        for r in d..=2 * d - 2 {
            cut(&mut region, &mut roles, (r as i64, r as i64 + 1), CutRole::Cusp(r));
        }
        for j in 1..=d - 1 {
            if h_on[j - 1] {
                let v = (di + j as i64, di + j as i64 + 1);
                cut(&mut region, &mut roles, v, CutRole::SlotH(j));
            }
        }
        CornerWedge {
            d,
            region,
            roles,
            e_on: e_on.to_vec(),
            h_on: h_on.to_vec(),
            g_on,
        }
    }

    fn label_of(&self, role: CutRole) -> usize {
        let pos = self
            .roles
            .iter()
            .position(|&r| r == role)
            .expect("cut role present");
        2 * self.d + 1 + pos
    }

    /// Counts the fillings whose strands, continued through the forced
    /// exterior of the grid, realise exactly the matching `x` on the `2d`
    /// links.
    ///
    /// The exterior contributes a fixed connector: the verticals below
    /// `(1, 1)` and `(2, 2)` are joined, each occupied slot `e_{k-1}` is
    /// joined to the left border of row `k + 1`, each occupied slot `h_k`
    /// to the vertical into the cusp below it, and the remaining loose
    /// crossings are joined through the nested far arches — the free left
    /// borders top to bottom against the free cusp verticals bottom to top
    /// followed by `g`. Closed loops through the cut are admissible.
    fn matches(&self, x: &Matching) -> u64 {
        let d = self.d;
        let total = 2 * d + self.roles.len();
        let mut ext: Vec<Option<usize>> = alloc::vec![None; total + 1];
        let mut link = |ext: &mut Vec<Option<usize>>, a: usize, b: usize| {
            debug_assert!(ext[a].is_none() && ext[b].is_none());
            ext[a] = Some(b);
            ext[b] = Some(a);
        };
        link(&mut ext, self.label_of(CutRole::TopLeft), self.label_of(CutRole::Left(2)));
        for k in 2..d {
            if self.e_on[k - 2] {
                let e = self.label_of(CutRole::SlotE(k - 1));
                link(&mut ext, e, self.label_of(CutRole::Left(k + 1)));
            }
        }
        for k in 1..d {
            if self.h_on[k - 1] {
                let h = self.label_of(CutRole::SlotH(k));
                link(&mut ext, h, self.label_of(CutRole::Cusp(d - 1 + k)));
            }
        }
        let mut upper = alloc::vec![self.label_of(CutRole::Left(1))];
        for k in 2..d {
            if !self.e_on[k - 2] {
                upper.push(self.label_of(CutRole::Left(k + 1)));
            }
        }
        let mut lower: Vec<usize> = Vec::new();
        for r in (d..=2 * d - 2).rev() {
            if !self.h_on[r - d] {
                lower.push(self.label_of(CutRole::Cusp(r)));
            }
        }
        if self.g_on {
            lower.push(self.label_of(CutRole::SlotG));
        }
        debug_assert_eq!(upper.len(), lower.len());

        let want = x.arcs();
        let mut count = 0u64;
        self.region.enumerate(&mut |st: &[bool]| {
            let mut visited = alloc::vec![false; st.len()];
            let mut mate = alloc::vec![0usize; total + 1];
            for v in 0..self.region.verts.len() {
                let Some(label) = self.region.stub[v] else { continue };
                for &first in &self.region.incident[v] {
                    if !st[first] || visited[first] {
                        continue;
                    }
                    match self.region.walk(st, &mut visited, v, first) {
                        PathEnd::Stub(other) => {
                            mate[label] = other;
                            mate[other] = label;
                        }
                        PathEnd::Open(_) => unreachable!("wedge strands end at stubs"),
                    }
                }
            }
            // Chains alternate wedge strands and exterior joints. A chain
            // from a link must reach another link; a chain from a free left
            // border must reach its partner across the far arches.
            let mut ok = true;
            let mut got: Vec<(usize, usize)> = Vec::new();
            let mut seen = alloc::vec![false; total + 1];
            for s in 1..=2 * d {
                if seen[s] {
                    continue;
                }
                seen[s] = true;
                let mut cur = s;
                loop {
                    let w = mate[cur];
                    seen[w] = true;
                    if w <= 2 * d {
                        got.push((s.min(w), s.max(w)));
                        break;
                    }
                    match ext[w] {
                        Some(y) => {
                            seen[y] = true;
                            cur = y;
                        }
                        None => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    break;
                }
            }
            if ok {
                for (i, &u0) in upper.iter().enumerate() {
                    debug_assert!(!seen[u0]);
                    seen[u0] = true;
                    let mut cur = u0;
                    let end = loop {
                        let w = mate[cur];
                        seen[w] = true;
                        match ext[w] {
                            Some(y) => {
                                seen[y] = true;
                                cur = y;
                            }
                            None => break w,
                        }
                    };
                    if end != lower[i] {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                got.sort_unstable();
                if got == want {
                    count += 1;
                }
            }
        });
        count
    }
}

/// Number of fillings of the corner wedge behind a corner placement of `x`
/// that realise `x` with interface pair `(E, F)`, with the junction
/// overlap subtracted.
///
/// The pair is translated to cut slots as follows: `e_i` is occupied when
/// `i` is in `E`; `h_j` is occupied when `d - j` is in `F`; `g` is occupied
/// when `d` is not in `F`. When `1` is in `E` and `d` is in `F`, the
/// fillings for the pair `(E - {1}, F - {d})` embed into the enumerated set
/// by rerouting one strand across the junction, and the hexagon-family
/// counts [`count_n`](crate::lgv::count_n) absorb that overlap; the
/// embedded copies are subtracted so that summing
/// `corner_count(x, E, F) * count_n(E, F, d, m)` over all admissible pairs
/// yields the number of grid configurations realising the corner placement
/// of `x`.
///
/// For `d = 1` the wedge degenerates to a single forced corner and the
/// count is `1` for the unique admissible pair `(∅, {1})`.
pub fn corner_count(x: &Matching, e: &[usize], f: &[usize]) -> Result<BigInt, Error> {
    let d = x.size();
    crate::lgv::validate_n_sets(e, f, d)?;
    if d == 1 {
        return Ok(BigInt::one());
    }
    if d > MAX_TRIANGLE_D {
        return Err(Error::TooLarge(alloc::format!(
            "corner wedge enumeration supports d <= {MAX_TRIANGLE_D}, got {d}"
        )));
    }
    let raw = wedge_matches(x, e, f);
    if e.contains(&1) && f.contains(&d) {
        let e_inner: Vec<usize> = e.iter().copied().filter(|&v| v != 1).collect();
        let f_inner: Vec<usize> = f.iter().copied().filter(|&v| v != d).collect();
        Ok(BigInt::from(raw) - BigInt::from(wedge_matches(x, &e_inner, &f_inner)))
    } else {
        Ok(BigInt::from(raw))
    }
}

fn wedge_matches(x: &Matching, e: &[usize], f: &[usize]) -> u64 {
    let d = x.size();
    let e_on: Vec<bool> = (1..=d - 2).map(|i| e.contains(&i)).collect();
    let h_on: Vec<bool> = (1..=d - 1).map(|j| f.contains(&(d - j))).collect();
    let g_on = !f.contains(&d);
    CornerWedge::new(d, &e_on, &h_on, g_on).matches(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Partition;

    fn m(s: &str) -> Matching {
        Matching::parse(s).unwrap()
    }

    #[test]
    fn triangle_d1_has_single_configuration() {
        let tables = TriangleTables::build(1).unwrap();
        let x = m("1-2");
        assert_eq!(tables.a_double(&x, &[], &[]), 1);
        assert_eq!(tables.rows().len(), 1);
    }

    #[test]
    fn triangle_d2_frozen_tables() {
        let tables = TriangleTables::build(2).unwrap();
        let x = m("1-2,3-4");
        assert_eq!(tables.a_double(&x, &[1], &[1]), 2);
        assert_eq!(tables.a_double(&x, &[1], &[2]), 1);
        assert_eq!(tables.a_double(&x, &[2], &[1]), 1);
        assert_eq!(tables.a_double(&x, &[2], &[2]), 0);
        let nested = m("1-4,2-3");
        assert_eq!(tables.a_double(&nested, &[1], &[1]), 1);
        assert_eq!(tables.a_double(&nested, &[1], &[2]), 0);
        assert_eq!(tables.a_double(&nested, &[2], &[1]), 0);
        assert_eq!(tables.a_double(&nested, &[2], &[2]), 0);
    }

    #[test]
    fn slot_weight_matches_worked_example() {
        // For X = {1<->2, 3<->4, 5<->6} exactly six configurations of the
        // triangle occupy the left slots {1, 4}, once the right border is
        // summed out with tableau weights.
        let tables = TriangleTables::build(3).unwrap();
        let x = m("1-2,3-4,5-6");
        assert_eq!(tables.a_single(&x, &[1, 4]), BigInt::from(6));
    }

    #[test]
    fn mirror_exchanges_slot_sets() {
        for d in 1..=3 {
            let tables = TriangleTables::build(d).unwrap();
            for (x, e1, e2, count) in tables.rows() {
                assert_eq!(
                    tables.a_double(&x.reversed(), &e2, &e1),
                    count,
                    "mirror mismatch at d = {d}, x = {}, e1 = {e1:?}, e2 = {e2:?}",
                    x.to_paren_word()
                );
            }
        }
    }

    #[test]
    fn census_holds_for_small_triangles() {
        for d in 1..=2 {
            let census = triangle_census(d).unwrap();
            assert!(census.configs > 0);
        }
    }

    #[test]
    fn census_slot_sets_are_constrained_d2() {
        let census = triangle_census(2).unwrap();
        for ((word, e1), by_e2) in &census.table {
            let x = Matching::from_paren_word(word).unwrap();
            // Left slot sets have d-1 elements and diagrams inside the
            // matching's diagram; right ones inside its conjugate.
            assert_eq!(e1.len(), 1);
            let lam_x = x.to_partition();
            assert!(lam_x.contains(&partition_of_set(e1, 2)));
            for e2 in by_e2.keys() {
                assert_eq!(e2.len(), 1);
                assert!(lam_x.conjugate().contains(&partition_of_set(e2, 2)));
            }
            if partition_of_set(e1, 2) == lam_x {
                // Saturated left border: unique configuration, staircase
                // right border.
                assert_eq!(by_e2.len(), 1);
                assert_eq!(by_e2[&vec![1usize]], 1);
            }
        }
    }

    #[test]
    fn dyck_path_condition_d3() {
        let census = triangle_census(3).unwrap();
        for ((_, e1), _) in census.table.iter() {
            assert_eq!(e1.len(), 2);
            let path = set_path(e1, 4);
            assert!(path.iter().all(|&h| h >= 0), "set {e1:?} not a ballot set");
        }
    }

    #[test]
    fn saturated_left_border_forces_staircase_d3() {
        let census = triangle_census(3).unwrap();
        for ((word, e1), by_e2) in &census.table {
            let x = Matching::from_paren_word(word).unwrap();
            if partition_of_set(e1, 4) == x.to_partition() {
                assert_eq!(by_e2.len(), 1, "x = {word}, e1 = {e1:?}");
                assert_eq!(by_e2[&vec![1usize, 2]], 1, "x = {word}, e1 = {e1:?}");
            }
        }
    }
}


// SCRATCH PROBE 2 — deleted before release. Dumps the undecided region of the
// pentagon after propagation, to locate the true notch lines.
#[cfg(test)]
mod pentagon_free_dump {
    use super::*;
    use crate::grid::{fixed_edges_corner, Edge, Parity};
    use std::println;
    use std::string::String;

    fn in_wedge(d: i64, q: i64, r: i64, c: i64) -> bool {
        let u = c - q;
        r >= 1 && r <= 2 * d && u >= r && u <= 2 * d && !(u == r && r > d && r < 2 * d)
    }

    #[test]
    fn dump_free_region() {
        let (d, m) = (3usize, 6usize);
        let n = d + m;
        let ni = n as i64;
        let di = d as i64;
        let q = ni - 2 * di;
        let parity = Parity::of_grid(n);

        let mut region = Region::new();
        for r in 1..=ni {
            for c in 1..=ni {
                if !in_wedge(di, q, r, c) {
                    region.add_vertex((r, c), true);
                }
            }
        }
        for r in 1..=ni {
            for c in 1..=ni {
                if in_wedge(di, q, r, c) || !(r == 1 || c == 1 || r == ni || c == ni) {
                    continue;
                }
                let mut labels = Vec::new();
                if r == 1 {
                    labels.push(c);
                }
                if c == ni {
                    labels.push(ni + r);
                }
                if r == ni {
                    labels.push(1 - ni - c);
                }
                if c == 1 {
                    labels.push(1 - r);
                }
                for l in labels {
                    if parity.occupies(l) {
                        region.set_stub((r, c), (1000 + l + 2 * ni) as usize);
                    }
                }
            }
        }
        let inside = |r: i64, c: i64| r >= 1 && r <= ni && c >= 1 && c <= ni && !in_wedge(di, q, r, c);
        for r in 1..=ni {
            for c in 1..=ni {
                if !inside(r, c) {
                    continue;
                }
                if inside(r, c + 1) {
                    region.add_edge((r, c), (r, c + 1));
                }
                if inside(r + 1, c) {
                    region.add_edge((r, c), (r + 1, c));
                }
            }
        }
        // Forced cut crossers as half-edges to phantoms (slots all OFF: omitted).
        let mut forced_cuts: Vec<((i64, i64), String)> = Vec::new();
        for r in 1..=di {
            forced_cuts.push(((r, r + q - 1), alloc::format!("A{r}")));
        }
        forced_cuts.push(((2, 1 + q), String::from("B")));
        for r in di..=(2 * di - 2) {
            forced_cuts.push(((r + 1, r + 1 + q), alloc::format!("T{r}")));
        }
        for (i, (pv, _)) in forced_cuts.iter().enumerate() {
            let ph = (-(i as i64) - 1, -1);
            region.add_vertex(ph, false);
            region.set_stub(ph, i + 1);
            region.add_edge(*pv, ph);
            region.force(*pv, ph);
        }
        for e in fixed_edges_corner(d, m) {
            let ((r1, c1), (r2, c2)) = match e {
                Edge::H(r, c) => ((r as i64, c as i64), (r as i64, c as i64 + 1)),
                Edge::V(r, c) => ((r as i64, c as i64), (r as i64 + 1, c as i64)),
            };
            if inside(r1, c1) && inside(r2, c2) {
                region.force((r1, c1), (r2, c2));
            }
        }

        // Propagate once from the forced seed and print the edge statuses.
        let mut state: Vec<Option<bool>> = alloc::vec![None; region.edges.len()];
        for &e in &region.forced {
            state[e] = Some(true);
        }
        let mut trail = Vec::new();
        let ok = region.propagate(&mut state, &mut trail);
        println!("propagation ok: {ok}");
        let status = |a: (i64, i64), b: (i64, i64)| -> char {
            let (Some(&ia), Some(&ib)) = (region.index.get(&a), region.index.get(&b)) else {
                return ' ';
            };
            let found = region
                .edges
                .iter()
                .position(|&(x, y)| (x, y) == (ia, ib) || (x, y) == (ib, ia));
            match found {
                None => ' ',
                Some(e) => match state[e] {
                    Some(true) => '#',
                    Some(false) => '.',
                    None => '?',
                },
            }
        };
        for r in 1..=ni {
            let mut row1 = String::new();
            let mut row2 = String::new();
            for c in 1..=ni {
                row1.push(if inside(r, c) { '+' } else { 'W' });
                row1.push(status((r, c), (r, c + 1)));
                row2.push(status((r, c), (r + 1, c)));
                row2.push(' ');
            }
            println!("r={r:2} {row1}");
            println!("     {row2}");
        }
    }
}
