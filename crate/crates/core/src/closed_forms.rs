//! Closed-form values for the minimum equicut of cycles, complete graphs and
//! powers of cycles, together with the consecutive-block cut of `C_n^d`.
//!
//! For `2 <= d < floor(n/2)` let `X = {u_0, .., u_{h-1}}` with `h = floor(n/2)`.
//! The cut `(X, X^c)` has exactly `d(d+1)` edges. Its size is assembled from
//! the per-vertex counts `|(u_j, X^c)|` over the first half of the block,
//! doubled by the mirror symmetry about the block's mid-vertex (or pair of
//! mid-vertices). Two regimes appear in each parity case of `h`: `d` small
//! enough that a vertex reaches across only one end of the block, and `d`
//! large enough that vertices near the middle reach across both.

use crate::error::{Error, Result};
use crate::graph::{make_cycle_power, GraphFamily, GraphFamilySpec};
use crate::parity::{equicut_size, Equicut};

/// `floor(n/2) * ceil(n/2)`: the minimum equicut of `K_n`.
pub fn complete_rna(n: usize) -> usize {
    (n / 2) * n.div_ceil(2)
}

/// The value of the minimum equicut when it is known in closed form for
/// `family`; `None` otherwise. Conjectured values are never returned.
pub fn known_rna(family: &GraphFamilySpec) -> Option<usize> {
    let n = family.n;
    match family.family {
        GraphFamily::Cycle if n >= 3 => Some(2),
        GraphFamily::Complete if n >= 1 => Some(complete_rna(n)),
        GraphFamily::CyclePower if n >= 3 && family.d >= 1 => cycle_power_rna(n, family.d),
        GraphFamily::Circulant => {
            // {1, .., d} is C_n^d in circulant form
            let d = family.jumps.len();
            let consecutive = family.jumps.iter().copied().eq(1..=d);
            (consecutive && n >= 3 && d >= 1)
                .then(|| cycle_power_rna(n, d))
                .flatten()
        }
        _ => None,
    }
}

fn cycle_power_rna(n: usize, d: usize) -> Option<usize> {
    if d >= n / 2 {
        return Some(complete_rna(n));
    }
    match d {
        1 => Some(2),
        2 if n >= 6 => Some(6),
        3 if n >= 8 => Some(12),
        _ => None,
    }
}

/// `floor((2m + n) / 4)`, an upper bound on the minimum equicut of any
/// graph with `n` vertices and `m` edges.
pub fn kang_upper_bound(n: usize, m: usize) -> usize {
    (2 * m + n) / 4
}

/// Which half-block layout applies to `h = floor(n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockParity {
    /// `h = 2k + 1`, single mid-vertex `u_k`.
    Odd,
    /// `h = 2k`, mid-vertices `u_{k-1}` and `u_k`.
    Even,
}

/// The consecutive block `{u_start, .., u_{start+h-1}}` of `C_n^d` and the
/// parameters the closed forms are stated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCutSpec {
    pub n: usize,
    pub d: usize,
    pub start: usize,
}

/// Derived block parameters. `ell` is zero in the small-`d` regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockParams {
    pub half: usize,
    pub parity: BlockParity,
    pub k: usize,
    pub ell: usize,
}

impl BlockCutSpec {
    pub fn new(n: usize, d: usize, start: usize) -> Result<Self> {
        check_range(n, d)?;
        if start >= n {
            return Err(Error::invalid(format!(
                "block start {start} outside 0..{n}"
            )));
        }
        Ok(BlockCutSpec { n, d, start })
    }

    pub fn half(&self) -> usize {
        self.n / 2
    }

    pub fn params(&self) -> BlockParams {
        block_params(self.n, self.d)
    }

    pub fn equicut(&self) -> Equicut {
        Equicut::block(self.n, self.start).expect("start checked")
    }

    /// Mid-vertex (odd `h`) or mid-vertices (even `h`) of the block.
    pub fn mid_vertices(&self) -> Vec<usize> {
        let p = self.params();
        let at = |j: usize| (self.start + j) % self.n;
        match p.parity {
            BlockParity::Odd => vec![at(p.k)],
            BlockParity::Even => vec![at(p.k - 1), at(p.k)],
        }
    }
}

fn check_range(n: usize, d: usize) -> Result<()> {
    if n < 5 || d < 2 || d >= n / 2 {
        return Err(Error::invalid(format!(
            "block formulas need n >= 5 and 2 <= d < floor(n/2); got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

/// `k` and `ell` for `(n, d)`: odd case `h = 2k + 1`, `d = k + ell`; even
/// case `h = 2k`, `d = (k - 1) + ell`.
pub fn block_params(n: usize, d: usize) -> BlockParams {
    let half = n / 2;
    if half % 2 == 1 {
        let k = (half - 1) / 2;
        BlockParams {
            half,
            parity: BlockParity::Odd,
            k,
            ell: d.saturating_sub(k),
        }
    } else {
        let k = half / 2;
        BlockParams {
            half,
            parity: BlockParity::Even,
            k,
            ell: (d + 1).saturating_sub(k),
        }
    }
}

/// `d(d+1)`, the size of the block cut of `C_n^d`.
pub fn block_cut_value(n: usize, d: usize) -> Result<usize> {
    check_range(n, d)?;
    Ok(d * (d + 1))
}

/// `|(u_{start+j}, X^c)|` counted on the adjacency of `C_n^d`.
pub fn boundary_count_direct(n: usize, d: usize, start: usize, j: usize) -> Result<usize> {
    let spec = BlockCutSpec::new(n, d, start)?;
    if j >= spec.half() {
        return Err(Error::invalid(format!(
            "offset {j} outside the block 0..{}",
            spec.half()
        )));
    }
    let g = make_cycle_power(n, d)?;
    let cut = spec.equicut();
    let v = (start + j) % n;
    Ok(g.neighbors(v).filter(|&w| !cut.contains(w)).count())
}

/// `|(u_j, X^c)|` from the case tables, for `j` in the first half of the
/// block including the mid-vertex (`0..=k` when `h` is odd, `0..k` when it
/// is even).
pub fn boundary_count_closed_form(n: usize, d: usize, j: usize) -> Result<usize> {
    check_range(n, d)?;
    let BlockParams { parity, k, .. } = block_params(n, d);
    match parity {
        BlockParity::Odd => {
            if j > k {
                return Err(Error::invalid(format!(
                    "offset {j} beyond the mid-vertex {k}"
                )));
            }
            Ok(odd_case(d, k, j))
        }
        BlockParity::Even => {
            if j >= k {
                return Err(Error::invalid(format!(
                    "offset {j} beyond the mid-vertices {} and {k}",
                    k - 1
                )));
            }
            Ok(even_case(d, k, j))
        }
    }
}

/// `h = 2k + 1`.
fn odd_case(d: usize, k: usize, j: usize) -> usize {
    if j == k {
        // mid-vertex
        if d <= k {
            0
        } else {
            let ell = d - k;
            2 * ell
        }
    } else if d <= k {
        d.saturating_sub(j)
    } else {
        let ell = d - k;
        if j + d <= 2 * k {
            d - j
        } else {
            2 * ell
        }
    }
}

/// `h = 2k`.
fn even_case(d: usize, k: usize, j: usize) -> usize {
    if d < k {
        d.saturating_sub(j)
    } else {
        let ell = d + 1 - k;
        if j + d < 2 * k {
            d - j
        } else {
            2 * ell - 1
        }
    }
}

/// `(assembled, direct)`: the block cut assembled from the closed-form
/// boundary counts by mirror symmetry, and the block cut counted on the graph.
pub fn block_cut_sum_identity(n: usize, d: usize) -> Result<(usize, usize)> {
    check_range(n, d)?;
    let BlockParams { parity, k, .. } = block_params(n, d);
    let first_half: usize = (0..k)
        .map(|j| boundary_count_closed_form(n, d, j))
        .sum::<Result<usize>>()?;
    let assembled = match parity {
        BlockParity::Odd => 2 * first_half + boundary_count_closed_form(n, d, k)?,
        BlockParity::Even => 2 * first_half,
    };
    let g = make_cycle_power(n, d)?;
    let direct = equicut_size(&g, &Equicut::block(n, 0)?)?;
    Ok((assembled, direct))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(known_rna(&GraphFamilySpec::complete(9)), Some(20));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(20, 2)), Some(6));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(12, 5)), None);
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(12, 6)), Some(36));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(12, 7)), Some(36));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(16, 3)), Some(12));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(7, 3)), Some(12));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(5, 2)), Some(6));
        assert_eq!(known_rna(&GraphFamilySpec::cycle_power(20, 4)), None);
        assert_eq!(known_rna(&GraphFamilySpec::cycle(3)), Some(2));
        assert_eq!(known_rna(&GraphFamilySpec::cycle(11)), Some(2));
        assert_eq!(
            known_rna(&GraphFamilySpec::circulant(14, vec![1, 2])),
            Some(6)
        );
        assert_eq!(known_rna(&GraphFamilySpec::circulant(14, vec![1, 3])), None);
    }

    #[test]
    fn block_values() {
        assert_eq!(block_cut_value(13, 2).unwrap(), 6);
        assert_eq!(block_cut_value(16, 3).unwrap(), 12);
        assert_eq!(block_cut_value(20, 7).unwrap(), 56);
        assert!(block_cut_value(12, 6).is_err());
        assert!(block_cut_value(12, 1).is_err());
    }

    #[test]
    fn direct_counts() {
        assert_eq!(boundary_count_direct(14, 2, 0, 0).unwrap(), 2);
        assert_eq!(boundary_count_direct(14, 2, 0, 3).unwrap(), 0);
        assert_eq!(boundary_count_direct(14, 5, 0, 3).unwrap(), 4);
        assert!(boundary_count_direct(14, 2, 0, 7).is_err());
        assert!(boundary_count_direct(14, 2, 14, 0).is_err());
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(boundary_count_closed_form(14, 2, 1).unwrap(), 1);
        assert_eq!(boundary_count_closed_form(16, 5, 3).unwrap(), 3);
        assert!(boundary_count_closed_form(16, 5, 4).is_err());
        assert!(boundary_count_closed_form(14, 2, 4).is_err());
    }

    #[test]
    fn params_and_mid_vertices() {
        let p = block_params(14, 5);
        assert_eq!((p.half, p.parity, p.k, p.ell), (7, BlockParity::Odd, 3, 2));
        let p = block_params(16, 5);
        assert_eq!((p.half, p.parity, p.k, p.ell), (8, BlockParity::Even, 4, 2));
        assert_eq!(BlockCutSpec::new(14, 2, 0).unwrap().mid_vertices(), vec![3]);
        assert_eq!(
            BlockCutSpec::new(16, 2, 13).unwrap().mid_vertices(),
            vec![0, 1]
        );
    }

    #[test]
    fn sum_identity_examples() {
        assert_eq!(block_cut_sum_identity(14, 4).unwrap(), (20, 20));
        assert_eq!(block_cut_sum_identity(16, 2).unwrap(), (6, 6));
        assert_eq!(block_cut_sum_identity(21, 6).unwrap(), (42, 42));
    }

    #[test]
    fn kang_bound() {
        assert_eq!(kang_upper_bound(6, 6), 4);
        assert_eq!(kang_upper_bound(12, 24), 15);
        assert_eq!(kang_upper_bound(5, 10), 6);
    }
}
