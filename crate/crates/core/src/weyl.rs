//! The affine Weyl group of type C_d acting on `Z^d` from the right.
//!
//! Generators: `s0` negates the first coordinate, `si` (`1 <= i < d`) swaps
//! coordinates `i` and `i+1`, and `sd` sends the last coordinate `x` to
//! `n - x` where `n = 2r + 2`. Every element is a signed permutation followed
//! by a translation in `nZ^d`, so elements are stored as that triple with
//! translations in units of `n`; the group law does not depend on `n`.

use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

/// `f . g` has coordinates `sign[i] * f[perm[i]] + n * offset[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    perm: Vec<u8>,
    sign: Vec<i8>,
    offset: Vec<i32>,
    len: u32,
}

impl WeylElt {
    pub fn identity(d: usize) -> Self {
        assert!((1..256).contains(&d), "rank out of range");
        let mut g = WeylElt {
            perm: (0..d as u8).collect(),
            sign: vec![1; d],
            offset: vec![0; d],
            len: 0,
        };
        g.len = g.compute_length();
        g
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn generator(d: usize, i: usize) -> Result<Self> {
        Self::identity(d).mul_gen(i)
    }

    pub fn from_word(d: usize, word: &[usize]) -> Result<Self> {
        let mut g = Self::identity(d);
        for &i in word {
            g = g.mul_gen(i)?;
        }
        Ok(g)
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i > self.rank() {
            Err(Error::GeneratorOutOfRange {
                index: i,
                max: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// `self * s_i`.
    pub fn mul_gen(&self, i: usize) -> Result<Self> {
        self.check_gen(i)?;
        let d = self.rank();
        let mut g = self.clone();
        if i == 0 {
            g.sign[0] = -g.sign[0];
            g.offset[0] = -g.offset[0];
        }
        if i == d {
            g.sign[d - 1] = -g.sign[d - 1];
            g.offset[d - 1] = 1 - g.offset[d - 1];
        }
        if i > 0 && i < d {
            g.perm.swap(i - 1, i);
            g.sign.swap(i - 1, i);
            g.offset.swap(i - 1, i);
        }
        g.len = g.compute_length();
        Ok(g)
    }

    /// `s_i * self`.
    pub fn gen_mul(&self, i: usize) -> Result<Self> {
        self.check_gen(i)?;
        let d = self.rank();
        let mut g = self.clone();
        for j in 0..d {
            let p = g.perm[j] as usize;
            if i == 0 && p == 0 {
                g.sign[j] = -g.sign[j];
            }
            if i == d && p == d - 1 {
                g.offset[j] += g.sign[j] as i32;
                g.sign[j] = -g.sign[j];
            }
            if i > 0 && i < d {
                if p == i - 1 {
                    g.perm[j] = i as u8;
                } else if p == i {
                    g.perm[j] = (i - 1) as u8;
                }
            }
        }
        g.len = g.compute_length();
        Ok(g)
    }

    /// Group product: acting by `self * other` is acting by `self`, then `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let d = self.rank();
        let mut g = Self::identity(d);
        for i in 0..d {
            let p = other.perm[i] as usize;
            g.perm[i] = self.perm[p];
            g.sign[i] = other.sign[i] * self.sign[p];
            g.offset[i] = other.sign[i] as i32 * self.offset[p] + other.offset[i];
        }
        g.len = g.compute_length();
        Ok(g)
    }

    pub fn inverse(&self) -> Self {
        let d = self.rank();
        let mut g = Self::identity(d);
        for i in 0..d {
            let p = self.perm[i] as usize;
            g.perm[p] = i as u8;
            g.sign[p] = self.sign[i];
            g.offset[p] = -(self.sign[i] as i32) * self.offset[i];
        }
        g.len = g.compute_length();
        g
    }

    /// Right action on an integer vector.
    pub fn act(&self, f: &[i64], n: i64) -> Vec<i64> {
        assert_eq!(f.len(), self.rank(), "vector length must equal the rank");
        (0..self.rank())
            .map(|i| self.sign[i] as i64 * f[self.perm[i] as usize] + n * self.offset[i] as i64)
            .collect()
    }

    pub fn length(&self) -> usize {
        self.len as usize
    }

    /// Number of reflecting hyperplanes separating a fixed interior point of
    /// the fundamental alcove from its image. Coordinates are rescaled so the
    /// point is `(1, 2, ..., d)`, the walls `x_i = k n/2` sit at multiples of
    /// `d+1` and the walls `x_i +- x_j = k n` at multiples of `2(d+1)`.
    fn compute_length(&self) -> u32 {
        let d = self.rank() as i64;
        let c1 = d + 1;
        let c2 = 2 * (d + 1);
        let p: Vec<i64> = (1..=d).collect();
        let img: Vec<i64> = (0..self.rank())
            .map(|i| self.sign[i] as i64 * p[self.perm[i] as usize] + c2 * self.offset[i] as i64)
            .collect();
        let cross = |a: i64, b: i64, c: i64| (a.div_euclid(c) - b.div_euclid(c)).unsigned_abs();
        let mut total = 0u64;
        for i in 0..self.rank() {
            total += cross(img[i], p[i], c1);
            for j in i + 1..self.rank() {
                total += cross(img[i] - img[j], p[i] - p[j], c2);
                total += cross(img[i] + img[j], p[i] + p[j], c2);
            }
        }
        total as u32
    }

    /// Generators `s` with `l(self * s) < l(self)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..=self.rank())
            .filter(|&i| self.mul_gen(i).map(|g| g.len < self.len).unwrap_or(false))
            .collect()
    }

    /// Generators `s` with `l(s * self) < l(self)`.
    pub fn left_descents(&self) -> Vec<usize> {
        (0..=self.rank())
            .filter(|&i| self.gen_mul(i).map(|g| g.len < self.len).unwrap_or(false))
            .collect()
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut g = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while g.len > 0 {
            let i = (0..=g.rank())
                .find(|&i| g.mul_gen(i).expect("in range").len < g.len)
                .expect("nontrivial element has a descent");
            g = g.mul_gen(i).expect("in range");
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Dotted reduced word, empty for the identity.
    pub fn word_string(&self) -> String {
        self.reduced_word()
            .iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Parses `s0.s1.s2`; `e` or the empty string is the identity.
    pub fn parse(d: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(Self::identity(d));
        }
        let mut word = Vec::new();
        for (pos, part) in t.split('.').enumerate() {
            let part = part.trim();
            let idx = part
                .strip_prefix('s')
                .and_then(|x| x.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse {
                    input: text.to_string(),
                    pos,
                    message: format!("bad generator {part:?}"),
                })?;
            word.push(idx);
        }
        Self::from_word(d, &word)
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("e")
        } else {
            f.write_str(&self.word_string())
        }
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt({self})")
    }
}

/// Product of `q_s` over a reduced word, given per-generator values.
pub fn word_product<T: Clone>(word: &[usize], per_gen: &[T], one: T, mul: impl Fn(&T, &T) -> T) -> T {
    word.iter().fold(one, |acc, &i| mul(&acc, &per_gen[i]))
}

fn check_proper(d: usize, gens: &[usize]) -> Result<()> {
    let set: BTreeSet<usize> = gens.iter().copied().collect();
    if let Some(&m) = set.iter().next_back() {
        if m > d {
            return Err(Error::GeneratorOutOfRange { index: m, max: d });
        }
    }
    if set.len() == d + 1 {
        return Err(Error::NotProperSubset(d));
    }
    Ok(())
}

/// All elements of the finite parabolic subgroup generated by `gens`.
pub fn parabolic_elements(d: usize, gens: &[usize]) -> Result<Vec<WeylElt>> {
    check_proper(d, gens)?;
    let e = WeylElt::identity(d);
    let mut seen: HashSet<WeylElt> = HashSet::from([e.clone()]);
    let mut queue = VecDeque::from([e]);
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        for &i in gens {
            let h = g.mul_gen(i)?;
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `g` is the shortest element of `W_gens * g`.
pub fn is_min_right_coset_rep(g: &WeylElt, gens: &[usize]) -> bool {
    gens.iter()
        .all(|&i| g.gen_mul(i).map(|h| h.length() > g.length()).unwrap_or(false))
}

/// `g` is the shortest element of `g * W_gens`.
pub fn is_min_left_coset_rep(g: &WeylElt, gens: &[usize]) -> bool {
    gens.iter()
        .all(|&i| g.mul_gen(i).map(|h| h.length() > g.length()).unwrap_or(false))
}

/// All elements of length at most `max_len`, sorted by length.
pub fn elements_upto(d: usize, max_len: usize) -> Vec<WeylElt> {
    let mut layers: Vec<Vec<WeylElt>> = vec![vec![WeylElt::identity(d)]];
    for k in 1..=max_len {
        let mut next: BTreeSet<WeylElt> = BTreeSet::new();
        for g in &layers[k - 1] {
            for i in 0..=d {
                let h = g.mul_gen(i).expect("in range");
                if h.length() == k {
                    next.insert(h);
                }
            }
        }
        layers.push(next.into_iter().collect());
    }
    layers.into_iter().flatten().collect()
}

/// Minimal right coset representatives for `W_gens \ W` up to a length bound.
pub fn min_coset_reps_upto(d: usize, gens: &[usize], max_len: usize) -> Result<Vec<WeylElt>> {
    check_proper(d, gens)?;
    Ok(elements_upto(d, max_len)
        .into_iter()
        .filter(|g| is_min_right_coset_rep(g, gens))
        .collect())
}

/// Minimal double coset representatives `D_lam ∩ D_mu^{-1}` up to a length bound.
pub fn double_coset_reps_upto(
    d: usize,
    lam: &[usize],
    mu: &[usize],
    max_len: usize,
) -> Result<Vec<WeylElt>> {
    check_proper(d, lam)?;
    check_proper(d, mu)?;
    Ok(elements_upto(d, max_len)
        .into_iter()
        .filter(|g| is_min_right_coset_rep(g, lam) && is_min_left_coset_rep(g, mu))
        .collect())
}

/// The double coset `W_lam * g * W_mu`.
pub fn double_coset(d: usize, lam: &[usize], g: &WeylElt, mu: &[usize]) -> Result<Vec<WeylElt>> {
    let wl = parabolic_elements(d, lam)?;
    let wm = parabolic_elements(d, mu)?;
    let mut out: BTreeSet<WeylElt> = BTreeSet::new();
    for a in &wl {
        let ag = a.mul(g)?;
        for b in &wm {
            out.insert(ag.mul(b)?);
        }
    }
    let mut v: Vec<WeylElt> = out.into_iter().collect();
    v.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions() {
        for d in 1..=4 {
            for i in 0..=d {
                let s = WeylElt::generator(d, i).unwrap();
                assert_eq!(s.length(), 1);
                assert!(s.mul(&s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn braid_relations() {
        let d = 3;
        let check = |w1: &[usize], w2: &[usize]| {
            assert_eq!(
                WeylElt::from_word(d, w1).unwrap(),
                WeylElt::from_word(d, w2).unwrap()
            );
        };
        check(&[0, 1, 0, 1], &[1, 0, 1, 0]);
        check(&[2, 3, 2, 3], &[3, 2, 3, 2]);
        check(&[1, 2, 1], &[2, 1, 2]);
        check(&[0, 2], &[2, 0]);
        check(&[1, 3], &[3, 1]);
    }

    #[test]
    fn action_matches_generators() {
        let n = 8;
        let f = [3, -1, 5];
        let s0 = WeylElt::generator(3, 0).unwrap();
        let s1 = WeylElt::generator(3, 1).unwrap();
        let s3 = WeylElt::generator(3, 3).unwrap();
        assert_eq!(s0.act(&f, n), vec![-3, -1, 5]);
        assert_eq!(s1.act(&f, n), vec![-1, 3, 5]);
        assert_eq!(s3.act(&f, n), vec![3, -1, 3]);
        let g = s0.mul(&s1).unwrap();
        assert_eq!(g.act(&f, n), s1.act(&s0.act(&f, n), n));
    }

    #[test]
    fn left_and_right_multiplication_agree_with_mul() {
        let g = WeylElt::from_word(2, &[0, 1, 2, 1]).unwrap();
        for i in 0..=2 {
            let s = WeylElt::generator(2, i).unwrap();
            assert_eq!(g.mul_gen(i).unwrap(), g.mul(&s).unwrap());
            assert_eq!(g.gen_mul(i).unwrap(), s.mul(&g).unwrap());
        }
    }

    #[test]
    fn translation_has_expected_length() {
        // s_d s_{d-1} ... s_0 ... s_{d-1} is a translation of length 2d.
        let d = 3;
        let w = WeylElt::from_word(d, &[3, 2, 1, 0, 1, 2]).unwrap();
        assert_eq!(w.length(), 2 * d);
        assert_eq!(w.act(&[0, 0, 0], 8), vec![0, 0, -8]);
    }

    #[test]
    fn parabolic_sizes() {
        // type C_2 finite: order 8; type A_1 x A_1: order 4
        assert_eq!(parabolic_elements(2, &[0, 1]).unwrap().len(), 8);
        assert_eq!(parabolic_elements(2, &[0, 2]).unwrap().len(), 4);
        assert_eq!(parabolic_elements(3, &[1, 2]).unwrap().len(), 6);
        assert!(parabolic_elements(2, &[0, 1, 2]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let g = WeylElt::parse(2, "s0.s1.s2").unwrap();
        assert_eq!(g.to_string(), "s0.s1.s2");
        assert_eq!(WeylElt::parse(2, "e").unwrap(), WeylElt::identity(2));
        assert!(WeylElt::parse(2, "s3").is_err());
    }
}
