//! Permutations on 0..d-1, the generator input format for symmetric,
//! alternating, and ad-hoc groups.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &im in &images {
            if im >= d {
                return Err(Error::BadParameter(format!(
                    "image {im} out of range for degree {d}"
                )));
            }
            if seen[im] {
                return Err(Error::BadParameter(format!(
                    "image {im} repeats; not a bijection"
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`. Cycles are applied left
    /// to right; points not mentioned are fixed. Commas may replace spaces.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        let mut rest = text.trim();
        if rest.is_empty() {
            return Ok(acc);
        }
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::BadParameter(format!(
                    "expected '(' in cycle spec, found {rest:?}"
                )));
            };
            if !rest[..open].trim().is_empty() {
                return Err(Error::BadParameter(format!(
                    "stray text {:?} before cycle",
                    &rest[..open]
                )));
            }
            let Some(close) = rest.find(')') else {
                return Err(Error::BadParameter("unclosed cycle".into()));
            };
            let body = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::BadParameter(format!("bad point {tok:?} in cycle")))?;
                if p >= degree {
                    return Err(Error::BadParameter(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if cycle.contains(&p) {
                    return Err(Error::BadParameter(format!("point {p} repeats in a cycle")));
                }
                cycle.push(p);
            }
            let mut images: Vec<usize> = (0..degree).collect();
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
            acc = acc.then(&Permutation { images });
            rest = rest[close + 1..].trim_start();
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        let mut done = vec![false; self.degree()];
        for start in 0..self.degree() {
            if done[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !done[p] {
                done[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
