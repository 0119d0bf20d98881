//! Explicit Weyl elements and block-permutation conjugators.
//!
//! A symplectic monomial matrix is determined by its first half of rows: if
//! row `rho` carries sign `s` in column `c`, then row `rho*` carries
//! `eps(c) eps(rho) s` in column `c*`, where `x* = 2m + 1 - x` and
//! `eps(x) = +1` on the first half and `-1` on the second.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{form_sign, inversion_count, WeylElement};

/// Completes a partial placement `(row, col, sign)` (0-based) to a symplectic
/// monomial matrix by mirroring. Every row must end up with exactly one entry.
pub fn complete_from_rows(size: usize, placements: &[(usize, usize, i8)]) -> Result<WeylElement> {
    let mut perm: Vec<Option<(usize, i8)>> = vec![None; size];
    let mut put = |row: usize, col: usize, s: i8| -> Result<()> {
        if row >= size || col >= size {
            return Err(Error::Shape(format!("placement ({row},{col}) outside size {size}")));
        }
        match perm[row] {
            Some(prev) if prev != (col, s) => Err(Error::Precondition(format!(
                "row {row} gets both column {} and column {col}",
                prev.0
            ))),
            _ => {
                perm[row] = Some((col, s));
                Ok(())
            }
        }
    };
    for &(row, col, s) in placements {
        put(row, col, s)?;
        let mirror_sign = (form_sign(col, size) * form_sign(row, size)) as i8 * s;
        put(size - 1 - row, size - 1 - col, mirror_sign)?;
    }
    let mut cols = Vec::with_capacity(size);
    let mut signs = Vec::with_capacity(size);
    for (row, entry) in perm.into_iter().enumerate() {
        let (c, s) = entry.ok_or_else(|| {
            Error::Precondition(format!("row {row} is not determined by the placement"))
        })?;
        cols.push(c);
        signs.push(s);
    }
    WeylElement::new(cols, signs)
}

/// The element of `Sp_{2l}` with `w_{i,2i-1} = 1` for `1 <= i <= l`.
pub fn weyl_theta03(l: usize) -> Result<WeylElement> {
    if l == 0 {
        return Err(Error::Precondition("l must be at least 1".into()));
    }
    let rows: Vec<_> = (0..l).map(|i| (i, 2 * i, 1)).collect();
    complete_from_rows(2 * l, &rows)
}

/// The element of `Sp_{2(l+r)}` of block form
/// `[[e1, 0, e2], [0, I_2l, 0], [e3, 0, e4]]` with `r x r` corner blocks,
/// `e1(i, 2i-1) = 1` for `1 <= i <= (r+1)/2` and
/// `e2(i + (r+3)/2, 2i+2) = 1` for `0 <= i <= (r-3)/2`.
pub fn weyl_theta02(r: usize, l: usize) -> Result<WeylElement> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!("r must be odd and at least 3, got {r}")));
    }
    let size = 2 * (l + r);
    let mut rows = Vec::new();
    for i in 1..=r.div_ceil(2) {
        rows.push((i - 1, 2 * i - 2, 1));
    }
    for i in 0..=(r - 3) / 2 {
        let row = i + (r + 3) / 2;
        let col = 2 * i + 2;
        rows.push((row - 1, r + 2 * l + col - 1, 1));
    }
    for i in 0..l {
        rows.push((r + i, r + i, 1));
    }
    complete_from_rows(size, &rows)
}

/// One identity block `I_size` of `w_1` or `w_2` with its first `1` at the
/// 1-based position `(row, col)` inside that `kr_1 x kr_1` matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CuspBlock {
    pub in_w2: bool,
    pub row: usize,
    pub col: usize,
    pub size: usize,
}

/// Identity-block placements of `w_1` and `w_2` for `k = 2 alpha + beta`.
pub fn weyl_cusp_blocks(alpha: usize, beta: usize, r: usize) -> Vec<CuspBlock> {
    let k = 2 * alpha + beta;
    let r1 = (r - 1) / 2;
    let mut out = Vec::new();
    for i in 1..=r1 {
        out.push(CuspBlock { in_w2: false, row: alpha * (i - 1) + 1, col: k * (i - 1) + 1, size: alpha });
    }
    for i in 1..=r1 {
        out.push(CuspBlock {
            in_w2: true,
            row: alpha * r1 + alpha * (i - 1) + 1,
            col: k * (i - 1) + 1,
            size: alpha,
        });
    }
    if beta > 0 {
        for i in 1..=r1 {
            out.push(CuspBlock {
                in_w2: false,
                row: alpha * (r - 1) + beta * (i - 1) + 1,
                col: k * (i - 1) + alpha + 1,
                size: beta,
            });
        }
    }
    out
}

/// The element `[[w1, 0, w2], [0, I_2n, 0], [w3, 0, w4]]` of
/// `Sp_{2n+k(r-1)}`, `k = 2 alpha + beta`, with `w_1`, `w_2` given by
/// [`weyl_cusp_blocks`].
pub fn weyl_cusp(alpha: usize, beta: usize, r: usize, n: usize) -> Result<WeylElement> {
    if alpha == 0 || r < 3 || r.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "need alpha >= 1 and odd r >= 3, got alpha = {alpha}, r = {r}"
        )));
    }
    let k = 2 * alpha + beta;
    let kr1 = k * (r - 1) / 2;
    let size = 2 * n + 2 * kr1;
    let mut rows = Vec::new();
    for b in weyl_cusp_blocks(alpha, beta, r) {
        let col_shift = if b.in_w2 { kr1 + 2 * n } else { 0 };
        for t in 0..b.size {
            rows.push((b.row - 1 + t, col_shift + b.col - 1 + t, 1));
        }
    }
    for t in 0..n {
        rows.push((kr1 + t, kr1 + t, 1));
    }
    complete_from_rows(size, &rows)
}

/// Ordered labelled blocks of a block-diagonal element.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockPattern {
    pub blocks: Vec<(String, usize)>,
}

impl BlockPattern {
    pub fn new(blocks: Vec<(String, usize)>) -> Self {
        Self { blocks }
    }

    pub fn from_pairs(pairs: &[(&str, usize)]) -> Self {
        Self::new(pairs.iter().map(|&(l, s)| (l.to_string(), s)).collect())
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut at = 0;
        self.blocks
            .iter()
            .map(|b| {
                let o = at;
                at += b.1;
                o
            })
            .collect()
    }
}

/// Coordinate permutation `pi` (source coordinate to target coordinate)
/// induced by sending the `j`-th source block to `block_map[j]`.
pub fn coordinate_permutation(src: &BlockPattern, dst: &BlockPattern, block_map: &[usize]) -> Vec<usize> {
    let (so, dof) = (src.offsets(), dst.offsets());
    let mut pi = vec![0; src.size()];
    for (j, &t) in block_map.iter().enumerate() {
        for x in 0..src.blocks[j].1 {
            pi[so[j] + x] = dof[t] + x;
        }
    }
    pi
}

/// Inversions of the coordinate permutation of a block map.
pub fn block_map_inversions(src: &BlockPattern, dst: &BlockPattern, block_map: &[usize]) -> usize {
    inversion_count(&coordinate_permutation(src, dst, block_map))
}

/// Matches equal labels in order of appearance.
pub fn stable_block_map(src: &BlockPattern, dst: &BlockPattern) -> Result<Vec<usize>> {
    if src.blocks.len() != dst.blocks.len() {
        return Err(Error::Precondition("patterns have different block counts".into()));
    }
    let mut slots: HashMap<&str, Vec<usize>> = HashMap::new();
    for (t, (label, _)) in dst.blocks.iter().enumerate().rev() {
        slots.entry(label.as_str()).or_default().push(t);
    }
    src.blocks
        .iter()
        .map(|(label, size)| {
            let t = slots
                .get_mut(label.as_str())
                .and_then(Vec::pop)
                .ok_or_else(|| Error::Precondition(format!("label {label} missing from target")))?;
            if dst.blocks[t].1 != *size {
                return Err(Error::Precondition(format!("label {label} changes size")));
            }
            Ok(t)
        })
        .collect()
}

/// The Weyl element of minimal inversion count with
/// `w diag(src) w^{-1} = diag(dst)` for every filling of the labelled blocks.
pub fn shortest_conjugator(src: &BlockPattern, dst: &BlockPattern) -> Result<WeylElement> {
    let size = src.size();
    if size != dst.size() || !size.is_multiple_of(2) {
        return Err(Error::Precondition("patterns must have the same even size".into()));
    }
    let map = stable_block_map(src, dst)?;
    let pi = coordinate_permutation(src, dst, &map);
    for c in 0..size {
        if pi[size - 1 - c] != size - 1 - pi[c] {
            return Err(Error::Precondition(
                "label matching is not compatible with the form".into(),
            ));
        }
    }
    // column c goes to row pi[c]; first-half columns get sign +1
    let mut cols = vec![0; size];
    let mut signs = vec![1i8; size];
    for c in 0..size {
        cols[pi[c]] = c;
        if c >= size / 2 {
            signs[pi[c]] = form_sign(pi[size - 1 - c], size) as i8;
        }
    }
    let w = WeylElement::new(cols, signs)?;
    let offsets = src.offsets();
    for (j, (label, len)) in src.blocks.iter().enumerate() {
        let s = &w.signs()[pi[offsets[j]]..pi[offsets[j]] + len];
        if s.iter().any(|&x| x != s[0]) {
            return Err(Error::Precondition(format!(
                "block {label} would be conjugated by a non-scalar sign"
            )));
        }
    }
    Ok(w)
}
