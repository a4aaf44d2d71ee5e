//! SCRATCH PROBE — deleted before release.
//!
//! Buckets full-grid corner-placement configurations by the occupancy state
//! of the wedge boundary slots, extracting per state:
//!   * the number of distinct wedge fillings (candidate c values),
//!   * the pentagon multiplicity (should match count_n of the decoded pair),
//!   * the exterior connectivity pattern of the ON cut points.

use std::collections::{BTreeMap, BTreeSet};

use fplcore::grid::{corner_placement, enumerate_fpl, FplConfig, Parity};
use fplcore::lgv::count_n;
use fplcore::matching::Matching;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Kind {
    A(usize),
    B,
    E(usize),
    G,
    T(usize),
    Hs(usize),
}

impl Kind {
    fn name(&self) -> String {
        match self {
            Kind::A(r) => format!("A{r}"),
            Kind::B => "B".into(),
            Kind::E(i) => format!("e{i}"),
            Kind::G => "g".into(),
            Kind::T(r) => format!("T{r}"),
            Kind::Hs(j) => format!("h{j}"),
        }
    }
    fn is_slot(&self) -> bool {
        matches!(self, Kind::E(_) | Kind::G | Kind::Hs(_))
    }
}

struct Wedge {
    d: usize,
    n: usize,
    verts: BTreeSet<(i64, i64)>,
    /// (is_vertical, r, c) of internal edges, fixed order.
    internal: Vec<(bool, i64, i64)>,
    /// Cut points in boundary order: kind, the edge, outside vertex, inward side.
    cuts: Vec<(Kind, (bool, i64, i64), (i64, i64), u8)>,
    /// (outside vertex, side) -> cut index.
    cutmap: BTreeMap<((i64, i64), u8), usize>,
    /// Forced-off crossings to verify.
    excluded: Vec<(bool, i64, i64)>,
}

impl Wedge {
    fn new(d: usize, m: usize) -> Wedge {
        assert!(m >= d + 1);
        let n = d + m;
        let q = (n - 2 * d) as i64;
        let di = d as i64;
        let mut verts = BTreeSet::new();
        for r in 1..=2 * di {
            for u in r..=2 * di {
                if u == r && r > di && r < 2 * di {
                    continue; // tip
                }
                verts.insert((r, u + q));
            }
        }
        let mut internal = Vec::new();
        for &(r, c) in &verts {
            if verts.contains(&(r, c + 1)) {
                internal.push((false, r, c));
            }
            if verts.contains(&(r + 1, c)) {
                internal.push((true, r, c));
            }
        }
        // Boundary order along the cut, top to bottom.
        let mut cuts: Vec<(Kind, (bool, i64, i64), (i64, i64), u8)> = Vec::new();
        for r in 1..=di {
            // left-H at local (r, r): edge H(r, r+q-1), outside vertex (r, r+q-1), step E.
            cuts.push((Kind::A(r as usize), (false, r, r + q - 1), (r, r + q - 1), 1));
            // down-V at local (r, r): edge V(r, r+q), outside vertex (r+1, r+q), step N.
            let kind = if r == 1 {
                Kind::B
            } else if r < di {
                Kind::E(r as usize - 1)
            } else {
                Kind::G
            };
            cuts.push((kind, (true, r, r + q), (r + 1, r + q), 0));
        }
        for r in di..=(2 * di - 2) {
            // down-V into tip: edge V(r, r+1+q), outside vertex = tip (r+1, r+1+q), step N.
            cuts.push((Kind::T(r as usize), (true, r, r + 1 + q), (r + 1, r + 1 + q), 0));
            // left-H from tip: edge H(r+1, r+1+q), outside vertex = tip, step E.
            cuts.push((
                Kind::Hs((r - di) as usize + 1),
                (false, r + 1, r + 1 + q),
                (r + 1, r + 1 + q),
                1,
            ));
        }
        let cutmap = cuts
            .iter()
            .enumerate()
            .map(|(i, &(_, _, v, s))| ((v, s), i))
            .collect();
        let excluded = vec![(false, 2 * di, 2 * di + q - 1), (true, 2 * di, 2 * di + q)];
        Wedge { d, n, verts, internal, cuts, cutmap, excluded }
    }

    fn edge_on(&self, cfg: &FplConfig, e: (bool, i64, i64)) -> bool {
        let (vert, r, c) = e;
        if vert {
            cfg.edge_v(r as usize, c as usize)
        } else {
            cfg.edge_h(r as usize, c as usize)
        }
    }

    /// Walk outward from cut point `id` through the exterior; returns the
    /// partner end name (another cut point or a far boundary link).
    fn walk(&self, cfg: &FplConfig, id: usize) -> String {
        let n = self.n as i64;
        let (_, _, mut v, mut came) = self.cuts[id];
        loop {
            let mut step = None;
            for side in 0..4u8 {
                if side == came {
                    continue;
                }
                let occupied = match side {
                    0 => {
                        if v.0 > 1 {
                            cfg.edge_v(v.0 as usize - 1, v.1 as usize)
                        } else {
                            cfg.parity.occupies(v.1)
                        }
                    }
                    1 => {
                        if v.1 < n {
                            cfg.edge_h(v.0 as usize, v.1 as usize)
                        } else {
                            cfg.parity.occupies(n + v.0)
                        }
                    }
                    2 => {
                        if v.0 < n {
                            cfg.edge_v(v.0 as usize, v.1 as usize)
                        } else {
                            cfg.parity.occupies(1 - n - v.1)
                        }
                    }
                    _ => {
                        if v.1 > 1 {
                            cfg.edge_h(v.0 as usize, v.1 as usize - 1)
                        } else {
                            cfg.parity.occupies(1 - v.0)
                        }
                    }
                };
                if occupied {
                    step = Some(side);
                    break;
                }
            }
            let side = step.expect("degree-2 violation in exterior walk");
            if let Some(&j) = self.cutmap.get(&(v, side)) {
                return self.cuts[j].0.name();
            }
            match side {
                0 => {
                    if v.0 == 1 {
                        return format!("L{}", v.1);
                    }
                    v = (v.0 - 1, v.1);
                    came = 2;
                }
                1 => {
                    if v.1 == n {
                        return format!("L{}", n + v.0);
                    }
                    v = (v.0, v.1 + 1);
                    came = 3;
                }
                2 => {
                    if v.0 == n {
                        return format!("L{}", 1 - n - v.1);
                    }
                    v = (v.0 + 1, v.1);
                    came = 0;
                }
                _ => {
                    if v.1 == 1 {
                        return format!("L{}", 1 - v.0);
                    }
                    v = (v.0, v.1 - 1);
                    came = 1;
                }
            }
            assert!(
                !self.verts.contains(&v),
                "exterior walk stepped into the wedge at {v:?}"
            );
        }
    }
}

fn probe(d: usize, m: usize) {
    let n = d + m;
    let wedge = Wedge::new(d, m);
    let parity = Parity::of_grid(n);
    let targets: BTreeMap<_, _> = Matching::enumerate(d)
        .into_iter()
        .map(|x| (format!("{:?}", corner_placement(&x, m).pairs), x.to_paren_word()))
        .collect();

    type Bucket = (u64, BTreeSet<Vec<bool>>, BTreeSet<String>);
    let mut buckets: BTreeMap<(String, Vec<bool>), Bucket> = BTreeMap::new();

    enumerate_fpl(n, parity, &mut |cfg| {
        let lm = format!("{:?}", cfg.label_matching().pairs);
        let Some(word) = targets.get(&lm) else { return };
        // Forced cut crossings.
        for &(kind, e, _, _) in &wedge.cuts {
            if !kind.is_slot() {
                assert!(wedge.edge_on(cfg, e), "forced crossing {} off", kind.name());
            }
        }
        for &e in &wedge.excluded {
            assert!(!wedge.edge_on(cfg, e), "excluded crossing on");
        }
        let state: Vec<bool> = wedge
            .cuts
            .iter()
            .filter(|(k, ..)| k.is_slot())
            .map(|&(_, e, _, _)| wedge.edge_on(cfg, e))
            .collect();
        let fill: Vec<bool> = wedge
            .internal
            .iter()
            .map(|&e| wedge.edge_on(cfg, e))
            .chain(state.iter().copied())
            .collect();
        // Exterior pattern over ON cut points.
        let mut pairs: BTreeSet<(String, String)> = BTreeSet::new();
        for (i, &(kind, e, _, _)) in wedge.cuts.iter().enumerate() {
            if !wedge.edge_on(cfg, e) {
                continue;
            }
            let me = kind.name();
            let other = wedge.walk(cfg, i);
            let (a, b) = if me <= other { (me, other) } else { (other, me) };
            pairs.insert((a, b));
        }
        let pattern = pairs
            .into_iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(" ");
        let entry = buckets
            .entry((word.clone(), state))
            .or_insert_with(|| (0, BTreeSet::new(), BTreeSet::new()));
        entry.0 += 1;
        entry.1.insert(fill);
        entry.2.insert(pattern);
    })
    .unwrap();

    println!("==== d={d} m={m} (n={n}) ====");
    let slot_names: Vec<String> = wedge
        .cuts
        .iter()
        .filter(|(k, ..)| k.is_slot())
        .map(|(k, ..)| k.name())
        .collect();
    println!("slots: {slot_names:?}");
    for ((word, state), (globals, fills, pats)) in &buckets {
        let on: Vec<&str> = slot_names
            .iter()
            .zip(state)
            .filter(|&(_, &b)| b)
            .map(|(s, _)| s.as_str())
            .collect();
        // Candidate dictionary: E from e-slots, F from h-slots plus d if g off.
        let mut e_set: Vec<usize> = Vec::new();
        let mut f_set: Vec<usize> = Vec::new();
        let mut g_on = false;
        for (name, &b) in slot_names.iter().zip(state) {
            if !b {
                continue;
            }
            if let Some(i) = name.strip_prefix('e') {
                e_set.push(i.parse().unwrap());
            } else if let Some(j) = name.strip_prefix('h') {
                f_set.push(j.parse().unwrap());
            } else {
                g_on = true;
            }
        }
        if !g_on {
            f_set.push(d);
        }
        let legal = f_set.len() == e_set.len() + 1;
        let nval = if legal {
            count_n(&e_set, &f_set, d, m as i64).map(|v| v.to_string()).unwrap_or("ERR".into())
        } else {
            "ILLEGAL".into()
        };
        let c = fills.len();
        let factor = if c > 0 && globals % (c as u64) == 0 {
            (globals / c as u64).to_string()
        } else {
            format!("{globals}/{c}?")
        };
        println!(
            "X={word} on={on:?} -> (E,F)=({e_set:?},{f_set:?}) N={nval} | globals={globals} fills={c} factor={factor} patterns={}",
            pats.len()
        );
        for p in pats {
            println!("      {p}");
        }
    }
    println!();
}

#[test]
fn corner_probe() {
    probe(2, 4);
    probe(2, 5);
    probe(3, 4);
}
