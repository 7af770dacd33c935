// Copyright 2026 The plrmc Developers
// SPDX-License-Identifier: Apache-2.0

//! Linear algebra over GF(2).
//!
//! Rows are packed into 64-bit words. Column order is whatever the caller
//! chooses; for Pauli vectors it is the lattice's canonical qubit order, so
//! reduced row echelon forms are reproducible.

use crate::error::{Error, Result};
use std::fmt;

/// Widest matrix accepted by the constructors.
pub const MAX_COLS: usize = 100_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_ones<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_ones(bits.len(), bits.iter().enumerate().filter(|(_, b)| **b != 0).map(|(i, _)| i))
    }

    pub fn unit(len: usize, i: usize) -> Self {
        Self::from_ones(len, [i])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let m = 1u64 << (i & 63);
        if b {
            self.words[i >> 6] |= m;
        } else {
            self.words[i >> 6] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// XOR restricted to words from `start_bit`'s word onward.
    fn xor_from(&mut self, other: &BitVec, start_bit: usize) {
        let w0 = start_bit >> 6;
        for (a, b) in self.words[w0..].iter_mut().zip(&other.words[w0..]) {
            *a ^= *b;
        }
    }

    /// Parity of the bitwise AND.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.next_one(0)
    }

    /// Smallest set index that is `>= from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut w = from >> 6;
        let mut word = self.words[w] & (!0u64 << (from & 63));
        loop {
            if word != 0 {
                let i = (w << 6) + word.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
            w += 1;
            if w >= self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn last_one(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate().rev() {
            if word != 0 {
                return Some((w << 6) + 63 - word.leading_zeros() as usize);
            }
        }
        None
    }

    pub fn ones(&self) -> Ones<'_> {
        Ones { v: self, next: 0 }
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Bits `[start, start+len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        BitVec::from_ones(len, self.ones().skip_while(|&i| i < start).take_while(|&i| i < start + len).map(|i| i - start))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub struct Ones<'a> {
    v: &'a BitVec,
    next: usize,
}

impl Iterator for Ones<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        let i = self.v.next_one(self.next)?;
        self.next = i + 1;
        Some(i)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

impl F2Matrix {
    pub fn new(cols: usize) -> Self {
        F2Matrix { cols, rows: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix { cols, rows: vec![BitVec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        F2Matrix { cols: n, rows: (0..n).map(|i| BitVec::unit(n, i)).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if cols > MAX_COLS {
            return Err(Error::TooWide(cols));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension { expected: cols, got: r.len() });
        }
        Ok(F2Matrix { cols, rows })
    }

    /// Build from a list of 0/1 rows. Panics on ragged input; meant for literals.
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| {
            assert_eq!(r.len(), cols, "ragged matrix literal");
            BitVec::from_bits(r)
        });
        F2Matrix { cols, rows: rows.collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn push_row(&mut self, r: BitVec) {
        assert_eq!(r.len(), self.cols);
        self.rows.push(r);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows.len() {
            return Err(Error::Dimension { expected: self.cols, got: other.rows.len() });
        }
        let rows = self.rows.iter().map(|r| other.combine(r)).collect();
        Ok(F2Matrix { cols: other.cols, rows })
    }

    /// `coeffs · self`, the sum of the rows selected by `coeffs`.
    pub fn combine(&self, coeffs: &BitVec) -> BitVec {
        let mut acc = BitVec::zeros(self.cols);
        for i in coeffs.ones() {
            acc.xor_assign(&self.rows[i]);
        }
        acc
    }

    /// Fully reduced row echelon form, zero rows kept at the bottom.
    pub fn rref(&self) -> (F2Matrix, usize) {
        let mut rows = self.rows.clone();
        let pivots = eliminate(&mut rows, self.cols, true);
        (F2Matrix { cols: self.cols, rows }, pivots.len())
    }

    /// Pivot columns of the reduced form.
    pub fn pivots(&self) -> Vec<usize> {
        let mut rows = self.rows.clone();
        eliminate(&mut rows, self.cols, false)
    }

    pub fn rank(&self) -> usize {
        self.pivots().len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn kernel(&self) -> F2Matrix {
        let mut rows = self.rows.clone();
        let pivots = eliminate(&mut rows, self.cols, true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = F2Matrix::new(self.cols);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::unit(self.cols, free);
            for (r, &p) in pivots.iter().enumerate() {
                if rows[r].get(free) {
                    v.set(p, true);
                }
            }
            out.rows.push(v);
        }
        out
    }

    /// Basis of `{c : c · self = 0}`.
    pub fn left_kernel(&self) -> F2Matrix {
        self.transpose().kernel()
    }

    pub fn inverse(&self) -> Result<F2Matrix> {
        let n = self.rows.len();
        if n != self.cols {
            return Err(Error::Dimension { expected: n, got: self.cols });
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug: Vec<BitVec> =
            self.rows.iter().enumerate().map(|(i, r)| r.concat(&BitVec::unit(n, i))).collect();
        let pivots = eliminate(&mut aug, 2 * n, true);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(F2Matrix { cols: n, rows: aug.iter().map(|r| r.slice(n, n)).collect() })
    }

    pub fn is_invertible(&self) -> bool {
        self.rows.len() == self.cols && self.rank() == self.cols
    }
}

/// Gaussian elimination in place. With `full`, rows above each pivot are
/// cleared as well. Returns pivot columns; nonzero rows end up first.
fn eliminate(rows: &mut [BitVec], cols: usize, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot, rest) = tail.split_first_mut().unwrap();
        for row in rest.iter_mut() {
            if row.get(c) {
                row.xor_from(pivot, c);
            }
        }
        if full {
            for row in head.iter_mut() {
                if row.get(c) {
                    row.xor_from(pivot, c);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row echelon form and rank.
pub fn rref(m: &F2Matrix) -> (F2Matrix, usize) {
    m.rref()
}

/// Row space of a matrix, stored as a canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: F2Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: F2Matrix::new(ambient) }
    }

    pub fn span(ambient: usize, rows: impl IntoIterator<Item = BitVec>) -> Result<Self> {
        let m = F2Matrix::from_rows(ambient, rows.into_iter().collect())?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &F2Matrix) -> Self {
        let (mut r, rank) = m.rref();
        r.rows.truncate(rank);
        Subspace { basis: r }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.rows.len()
    }

    pub fn basis(&self) -> &F2Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        // Rows are fully reduced, so one pass in pivot order decides membership.
        let mut v = v.clone();
        for row in &self.basis.rows {
            let p = row.first_one().unwrap();
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v.is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self, other)?;
        let rows = self.basis.rows.iter().chain(&other.basis.rows).cloned();
        Subspace::span(self.ambient_dim(), rows)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        subspace_intersection(self, other)
    }
}

fn check_ambient(u: &Subspace, v: &Subspace) -> Result<()> {
    if u.ambient_dim() != v.ambient_dim() {
        return Err(Error::Dimension { expected: u.ambient_dim(), got: v.ambient_dim() });
    }
    Ok(())
}

/// Zassenhaus: reduce `[u|u] ; [v|0]`; rows with zero left half span u ∩ v.
pub fn subspace_intersection(u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_ambient(u, v)?;
    let n = u.ambient_dim();
    let zero = BitVec::zeros(n);
    let mut rows: Vec<BitVec> = u.basis.rows.iter().map(|r| r.concat(r)).collect();
    rows.extend(v.basis.rows.iter().map(|r| r.concat(&zero)));
    let pivots = eliminate(&mut rows, 2 * n, false);
    let out = rows
        .into_iter()
        .zip(pivots)
        .filter(|(_, p)| *p >= n)
        .map(|(r, _)| r.slice(n, n));
    Subspace::span(n, out)
}

/// Coefficients `c` with `c · basis == target`, if any.
pub fn solve_in_span(basis: &F2Matrix, target: &BitVec) -> Option<BitVec> {
    if target.len() != basis.ncols() {
        return None;
    }
    let mut ech = Echelon::with_tags(basis.ncols(), basis.nrows());
    for (i, r) in basis.rows.iter().enumerate() {
        ech.insert_tagged(r.clone(), BitVec::unit(basis.nrows(), i));
    }
    let (rem, tag) = ech.reduce_tagged(target);
    rem.is_zero().then_some(tag)
}

/// Representatives of a basis of `big / small`.
pub fn quotient_basis(big: &Subspace, small: &Subspace) -> Result<Vec<BitVec>> {
    check_ambient(big, small)?;
    if !small.is_subspace_of(big) {
        return Err(Error::NotSubspace);
    }
    let mut ech = Echelon::new(big.ambient_dim());
    for r in &small.basis.rows {
        ech.insert(r.clone());
    }
    Ok(big.basis.rows.iter().filter(|r| ech.insert((*r).clone()).is_some()).cloned().collect())
}

/// Basis of the row space in which all leading positions are distinct and
/// all trailing positions are distinct. Every row then has minimal span
/// (last minus first set bit) among vectors of the space with that leading
/// position. Rows are returned sorted by span length, ties by leading bit.
pub fn minimal_span_basis(cols: usize, rows: impl IntoIterator<Item = BitVec>) -> Vec<BitVec> {
    let mut rows: Vec<BitVec> = rows.into_iter().collect();
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let rank = eliminate(&mut rows, cols, false).len();
    rows.truncate(rank);
    // Leads are distinct now; clear trailing collisions by adding the row
    // with the later lead to the one with the earlier lead, which keeps
    // leads fixed and strictly shortens the modified row.
    loop {
        let mut by_trail: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
        let mut changed = false;
        for i in 0..rows.len() {
            let t = rows[i].last_one().unwrap();
            match by_trail.get(&t).copied() {
                None => {
                    by_trail.insert(t, i);
                }
                Some(j) => {
                    let (early, late) =
                        if rows[i].first_one() < rows[j].first_one() { (i, j) } else { (j, i) };
                    let late_row = rows[late].clone();
                    rows[early].xor_assign(&late_row);
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let span = |r: &BitVec| r.last_one().unwrap() - r.first_one().unwrap();
    rows.sort_by_key(|r| (span(r), r.first_one().unwrap()));
    rows
}

/// Incrementally built echelon basis. Each row's pivot is its first set bit;
/// rows are not kept sorted, a pivot table drives reduction instead.
/// Optional tags record each row as a combination of the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<BitVec>,
    tags: Vec<BitVec>,
    tag_len: usize,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self::with_tags(cols, 0)
    }

    pub fn with_tags(cols: usize, tag_len: usize) -> Self {
        Echelon { cols, rows: Vec::new(), tags: Vec::new(), tag_len, pivot_row: vec![NONE; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn tags(&self) -> &[BitVec] {
        &self.tags
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        self.reduce_in_place(&mut v, None);
        v
    }

    pub fn reduce_tagged(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut tag = BitVec::zeros(self.tag_len);
        self.reduce_in_place(&mut v, Some(&mut tag));
        (v, tag)
    }

    fn reduce_in_place(&self, v: &mut BitVec, mut tag: Option<&mut BitVec>) {
        let mut pos = 0;
        while let Some(i) = v.next_one(pos) {
            let r = self.pivot_row[i];
            if r != NONE {
                v.xor_from(&self.rows[r as usize], i);
                if let Some(t) = tag.as_deref_mut() {
                    t.xor_assign(&self.tags[r as usize]);
                }
            }
            pos = i + 1;
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` if independent; returns the new row index.
    pub fn insert(&mut self, v: BitVec) -> Option<usize> {
        let t = BitVec::zeros(self.tag_len);
        self.insert_tagged(v, t)
    }

    pub fn insert_tagged(&mut self, v: BitVec, tag: BitVec) -> Option<usize> {
        let mut v = v;
        let mut tag = tag;
        self.reduce_in_place(&mut v, Some(&mut tag));
        let p = v.first_one()?;
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(v);
        self.tags.push(tag);
        Some(self.rows.len() - 1)
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::span(self.cols, self.rows.iter().cloned()).expect("echelon rows have the right width")
    }
}
