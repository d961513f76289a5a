//! Exact permutation arithmetic on the points `0..degree`.
//!
//! Points are stored 0-based; cycle notation in input and output is 1-based,
//! matching the usual `(1,2,3)(4,5)` convention. Composition is fixed as
//! apply-left-first throughout the crate: `p.then(q)` maps `i` to `q(p(i))`.

use std::fmt;

use crate::error::{Error, Result};

/// Hard limit on permutation degree. Ambient groups stay at or below 2^16
/// points; paired groups double the degree, hence the extra bit.
pub const MAX_DEGREE: usize = 1 << 17;

/// A bijection of `{0..degree-1}` stored as an image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            let x = x as usize;
            if x >= degree {
                return Err(Error::NotABijection(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    degree
                )));
            }
            if seen[x] {
                return Err(Error::NotABijection(format!(
                    "image {} appears twice",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_DEGREE,
            });
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let a = cycle[window];
                let b = cycle[(window + 1) % cycle.len()];
                if a == 0 || a > degree {
                    return Err(Error::NotABijection(format!(
                        "point {} out of range for degree {}",
                        a, degree
                    )));
                }
                if moved[a - 1] {
                    return Err(Error::NotABijection(format!("point {} repeated", a)));
                }
                moved[a - 1] = true;
                images[a - 1] = (b - 1) as u32;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Apply-left-first composition: `self.then(q)` maps `i` to `q(self(i))`.
    /// Panics on degree mismatch; use [`Permutation::compose`] for the
    /// checked variant.
    pub fn then(&self, q: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), q.degree());
        Permutation {
            images: self.images.iter().map(|&x| q.images[x as usize]).collect(),
        }
    }

    /// Checked apply-left-first composition.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: q.degree(),
            });
        }
        Ok(self.then(q))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self^h = h^-1 * self * h` (apply-left-first).
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.inverse().then(self).then(h)
    }

    /// Least `k >= 1` with `self^k` the identity, as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for cycle in self.cycles() {
            order = lcm(order, cycle.len() as u64);
        }
        order
    }

    /// The smallest point moved, or `None` for the identity.
    pub fn min_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Non-trivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// 1-based disjoint cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
