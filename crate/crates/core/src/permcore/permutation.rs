use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..degree}`.
///
/// Images are stored 0-based; everything that crosses the public API
/// (cycle notation, [`Permutation::image`], orbits, fixed points) is 1-based.
/// Composition is right-to-left: `p.compose(&q)` maps `x` to `p(q(x))`.
///
/// The derived ordering is lexicographic on the image array, which is the
/// total order used for canonical element lists and coset labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint(x + 1));
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from a list of disjoint cycles over 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    /// Commas are accepted as separators inside a cycle.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(Error::Malformed("empty string".into()));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Malformed(format!("expected '(' in {text:?}")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Malformed(format!("unclosed cycle in {text:?}")));
            };
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::Malformed(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad point {tok:?} in {text:?}")))?;
                cycle.push(p);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image array.
    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub(crate) fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> Result<usize> {
        if point == 0 || point > self.degree() {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree(),
            });
        }
        Ok(self.apply(point - 1) + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self ∘ x ∘ self⁻¹`.
    pub fn conjugate(&self, x: &Permutation) -> Permutation {
        self.mul(x).mul(&self.inverse())
    }

    /// Same as [`conjugate`](Self::conjugate) with a precomputed inverse.
    #[inline]
    pub(crate) fn conjugate_with(&self, inverse: &Permutation, x: &Permutation) -> Permutation {
        let images = inverse
            .images
            .iter()
            .map(|&i| self.images[x.images[i as usize] as usize])
            .collect();
        Permutation { images }
    }

    /// Moves this permutation into a larger domain, acting on points `offset+1..`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = x + offset as u32;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Disjoint cycles of length ≥ 2, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
