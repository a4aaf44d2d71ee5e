//! Exact rhombus-tiling counts for triangular-lattice cell regions.
//!
//! A region is encoded by its up-pointing and down-pointing cells in sheared
//! coordinates: the up cell at `(x, y)` is adjacent to the down cells at
//! `(x, y)`, `(x - 1, y)` and `(x, y - 1)`. A rhombus tiling is exactly a
//! perfect matching between adjacent up and down cells, which is counted
//! here by plain backtracking. These region counts serve as independent
//! oracles for the determinant formulas in [`crate::lgv`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::diagram::{d_code, Partition};
use crate::error::Error;

/// Hard guard on backtracking size.
pub const MAX_TILING_CELLS: usize = 64;

/// A finite region of up- and down-pointing triangular cells.
#[derive(Debug, Clone)]
pub struct CellRegion {
    up: Vec<(i64, i64)>,
    down: Vec<(i64, i64)>,
}

impl CellRegion {
    pub fn new(mut up: Vec<(i64, i64)>, mut down: Vec<(i64, i64)>) -> CellRegion {
        up.sort_unstable();
        up.dedup();
        down.sort_unstable();
        down.dedup();
        CellRegion { up, down }
    }

    pub fn up_cells(&self) -> &[(i64, i64)] {
        &self.up
    }

    pub fn down_cells(&self) -> &[(i64, i64)] {
        &self.down
    }

    /// Count perfect matchings between adjacent up and down cells.
    pub fn count_tilings(&self) -> Result<BigInt, Error> {
        if self.up.len() != self.down.len() {
            return Ok(BigInt::from(0));
        }
        if self.up.len() > MAX_TILING_CELLS {
            return Err(Error::TooLarge(alloc::format!(
                "tiling backtracker is limited to {MAX_TILING_CELLS} cells, got {}",
                self.up.len()
            )));
        }
        let index: BTreeMap<(i64, i64), usize> =
            self.down.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let nbrs: Vec<Vec<usize>> = self
            .up
            .iter()
            .map(|&(x, y)| {
                [(x, y), (x - 1, y), (x, y - 1)]
                    .into_iter()
                    .filter_map(|c| index.get(&c).copied())
                    .collect()
            })
            .collect();
        let mut count = 0u128;
        let mut used = 0u64;
        rec(&nbrs, 0, &mut used, &mut count);
        Ok(BigInt::from(count))
    }
}

fn rec(nbrs: &[Vec<usize>], i: usize, used: &mut u64, count: &mut u128) {
    if i == nbrs.len() {
        *count = count.checked_add(1).expect("tiling count overflow");
        return;
    }
    for &j in &nbrs[i] {
        if *used >> j & 1 == 0 {
            *used |= 1 << j;
            rec(nbrs, i + 1, used, count);
            *used &= !(1 << j);
        }
    }
}

/// The notched pentagon whose tilings are counted by the bounded fillings of
/// `lambda` with entries at most `d + h`: base side `2d`, bottom-left `d`,
/// left `h`, right `d + h`, and notches along the top side at the `0`
/// positions of the `d`-code of `lambda` (read west to east).
pub fn pentagon(lambda: &Partition, d: usize, h: i64) -> Result<CellRegion, Error> {
    if h < 0 {
        return Err(Error::Invalid("require h >= 0".into()));
    }
    let code = d_code(lambda, d)?;
    let di = d as i64;
    let top = di + h - 1;
    let mut up = Vec::new();
    let mut down = Vec::new();
    for x in -di..=di - 1 {
        for y in 0..=top {
            if x + y >= 0 {
                up.push((x, y));
            }
            if x + y >= -1 {
                down.push((x, y));
            }
        }
    }
    for (i, &b) in code.iter().enumerate() {
        if b == 0 {
            let cell = (-di + i as i64, top);
            let pos = down.iter().position(|&c| c == cell).expect("notch in range");
            down.swap_remove(pos);
        }
    }
    Ok(CellRegion::new(up, down))
}

/// The notched hexagon whose tilings realize the count `N(E, F, m)` of
/// [`crate::lgv::count_n`]: cells bounded by `-d + 1 <= x <= d - 2`,
/// `0 <= y <= m` and the diagonals `0 <= x + y <= m - 1` (shifted by one for
/// down cells), with an up notch at `(d - j - 1, m - d + j)` for each
/// `j in F` and a down notch at `(-d + j, m)` for each `j in E`.
pub fn hexagon(e_set: &[usize], f_set: &[usize], d: usize, m: i64) -> Result<CellRegion, Error> {
    crate::lgv::validate_n_sets(e_set, f_set, d)?;
    let di = d as i64;
    if d < 2 || m < di - 1 {
        return Err(Error::Invalid(alloc::format!(
            "hexagon region needs d >= 2 and m >= d - 1, got d = {d}, m = {m}"
        )));
    }
    let mut up = Vec::new();
    let mut down = Vec::new();
    for x in -di + 1..=di - 2 {
        for y in 0..=m {
            let s = x + y;
            if (0..=m - 1).contains(&s) {
                up.push((x, y));
            }
            if (-1..=m - 2).contains(&s) {
                down.push((x, y));
            }
        }
    }
    for &j in f_set {
        let cell = (di - j as i64 - 1, m - di + j as i64);
        let pos = up.iter().position(|&c| c == cell).expect("F notch in range");
        up.swap_remove(pos);
    }
    for &j in e_set {
        let cell = (-di + j as i64, m);
        let pos = down.iter().position(|&c| c == cell).expect("E notch in range");
        down.swap_remove(pos);
    }
    Ok(CellRegion::new(up, down))
}
