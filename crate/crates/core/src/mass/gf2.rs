//! Bit-packed vectors over GF(2) and an incremental row-echelon basis.
//!
//! A row's pivot is its lowest set column. Callers order columns so that
//! column 0 is the largest monomial, which puts pivots on leading terms.

use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = BitVec::zeros(len);
        v.set(i);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The lowest set index at or after `from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut wi = from / 64;
        let mut w = self.words[wi] & (!0u64 << (from % 64));
        loop {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.next_one(0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.first_one();
        std::iter::from_fn(move || {
            let cur = next?;
            next = self.next_one(cur + 1);
            Some(cur)
        })
    }
}

/// Rows in echelon form, each optionally tagged with the combination of
/// inserted vectors that produced it.
#[derive(Debug, Clone)]
pub struct Echelon {
    width: usize,
    tag_width: usize,
    rows: Vec<BitVec>,
    tags: Vec<BitVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(width: usize, tag_width: usize) -> Self {
        Echelon {
            width,
            tag_width,
            rows: Vec::new(),
            tags: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.first_one().expect("nonzero row"))
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Clears every pivot column of `v`, applying the same row operations to `tag`.
    pub fn reduce(&self, v: &mut BitVec, tag: &mut BitVec) {
        let mut at = v.first_one();
        while let Some(i) = at {
            if let Some(&r) = self.pivot_row.get(&i) {
                v.xor_assign(&self.rows[r]);
                tag.xor_assign(&self.tags[r]);
            }
            at = v.next_one(i + 1);
        }
    }

    pub fn reduce_untagged(&self, v: &mut BitVec) {
        let mut at = v.first_one();
        while let Some(i) = at {
            if let Some(&r) = self.pivot_row.get(&i) {
                v.xor_assign(&self.rows[r]);
            }
            at = v.next_one(i + 1);
        }
    }

    /// Inserts `v`. Returns `Err(tag)` with the dependency when `v` is in the span.
    pub fn insert(&mut self, mut v: BitVec, mut tag: BitVec) -> Result<usize, BitVec> {
        self.reduce(&mut v, &mut tag);
        match v.first_one() {
            None => Err(tag),
            Some(p) => {
                self.pivot_row.insert(p, self.rows.len());
                self.rows.push(v);
                self.tags.push(tag);
                Ok(p)
            }
        }
    }

    pub fn insert_untagged(&mut self, v: BitVec) -> bool {
        let t = BitVec::zeros(self.tag_width);
        self.insert(v, t).is_ok()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        self.reduce_untagged(&mut v);
        v.is_zero()
    }

    /// The combination of inserted vectors summing to `v`, if `v` is in the span.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        let mut v = v.clone();
        let mut tag = BitVec::zeros(self.tag_width);
        self.reduce(&mut v, &mut tag);
        v.is_zero().then_some(tag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(len: usize, ones: &[usize]) -> BitVec {
        let mut v = BitVec::zeros(len);
        for &i in ones {
            v.set(i);
        }
        v
    }

    #[test]
    fn scan_across_words() {
        let v = bv(200, &[3, 64, 130, 199]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 64, 130, 199]);
        assert_eq!(v.next_one(65), Some(130));
        assert_eq!(v.count_ones(), 4);
    }

    #[test]
    fn rank_and_solve() {
        let mut e = Echelon::new(70, 3);
        assert!(e.insert(bv(70, &[0, 65]), BitVec::unit(3, 0)).is_ok());
        assert!(e.insert(bv(70, &[65, 69]), BitVec::unit(3, 1)).is_ok());
        let dep = e.insert(bv(70, &[0, 69]), BitVec::unit(3, 2)).unwrap_err();
        assert_eq!(dep.ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(e.rank(), 2);
        let s = e.solve(&bv(70, &[0, 69])).unwrap();
        assert_eq!(s.ones().collect::<Vec<_>>(), vec![0, 1]);
        assert!(e.solve(&bv(70, &[1])).is_none());
    }
}
