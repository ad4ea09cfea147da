use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use super::permutation::Permutation;
use super::table;
use crate::error::{Error, Result};
use crate::parallel;

/// Resource limits for element enumeration and lattice searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group (or coset space) that may be enumerated.
    pub elements: usize,
    /// Largest group whose normal subgroup lattice may be computed.
    pub lattice: usize,
}

impl Caps {
    pub const DEFAULT_ELEMENTS: usize = 2_000_000;
    pub const DEFAULT_LATTICE: usize = 20_000;
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: Self::DEFAULT_ELEMENTS,
            lattice: Self::DEFAULT_LATTICE,
        }
    }
}

type ElementCache = OnceLock<Result<Arc<Vec<Permutation>>>>;

/// A finite permutation group given by degree and generators.
///
/// The element list is computed once (on first use, or eagerly by
/// [`PermGroup::from_generators`]) and kept sorted in the lexicographic order
/// of [`Permutation`]. Concurrent readers share a single computation.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    caps: Caps,
    elements: ElementCache,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            caps: self.caps,
            elements: self.elements.clone(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let mut s = f.debug_struct("PermGroup");
        s.field("degree", &self.degree).field("generators", &gens);
        if let Some(Ok(e)) = self.elements.get() {
            s.field("order", &e.len());
        }
        s.finish()
    }
}

impl PermGroup {
    /// Enumerates `⟨generators⟩` with default caps.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_with_caps(degree, generators, Caps::default())
    }

    pub fn from_generators_with_caps(
        degree: usize,
        generators: Vec<Permutation>,
        caps: Caps,
    ) -> Result<Self> {
        let g = Self::lazy(degree, generators, caps)?;
        g.elements()?;
        Ok(g)
    }

    /// Like [`from_generators_with_caps`](Self::from_generators_with_caps) but
    /// defers enumeration until the elements are first needed.
    pub fn lazy(degree: usize, generators: Vec<Permutation>, caps: Caps) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be positive".into()));
        }
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            caps,
            elements: OnceLock::new(),
        })
    }

    /// Parses cycle-notation generators.
    pub fn parse(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        let g = PermGroup {
            degree,
            generators: Vec::new(),
            caps: Caps::default(),
            elements: OnceLock::new(),
        };
        let _ = g
            .elements
            .set(Ok(Arc::new(vec![Permutation::identity(degree)])));
        g
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]])?);
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()])?);
        }
        Self::from_generators(n, gens)
    }

    /// Alternating group on `{1..n}`, generated by the 3-cycles `(1 2 i)`.
    pub fn alternating(n: usize) -> Result<Self> {
        let gens = (3..=n)
            .map(|i| Permutation::from_cycles(n, &[vec![1, 2, i]]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(n, gens)
    }

    /// Regular cyclic group generated by an `n`-cycle.
    pub fn cyclic(n: usize) -> Result<Self> {
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[(1..=n).collect()])?]
        } else {
            Vec::new()
        };
        Self::from_generators(n, gens)
    }

    /// Subgroup with a known, closed, sorted element list. Generators are
    /// chosen greedily in element order, so they depend only on the set.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        elements: Vec<Permutation>,
        caps: Caps,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements[0].is_identity());
        let generators = greedy_generators(&elements);
        let g = PermGroup {
            degree,
            generators,
            caps,
            elements: OnceLock::new(),
        };
        let _ = g.elements.set(Ok(Arc::new(elements)));
        g
    }

    /// Subgroup of `table` given by a membership bitset over table indices.
    pub(crate) fn from_bitset(
        degree: usize,
        table: &[Permutation],
        members: &FixedBitSet,
        caps: Caps,
    ) -> Self {
        let elems = members.ones().map(|i| table[i].clone()).collect();
        Self::from_sorted_elements(degree, elems, caps)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    /// Sorted element list.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.element_table().map(|a| a.as_slice())
    }

    pub(crate) fn element_table(&self) -> Result<&Arc<Vec<Permutation>>> {
        self.elements
            .get_or_init(|| {
                enumerate(self.degree, &self.generators, self.caps.elements).map(Arc::new)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    pub fn index_of(&self, p: &Permutation) -> Result<Option<usize>> {
        Ok(table::lookup(self.elements()?, p))
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.index_of(p)?.is_some())
    }

    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.order()? == 1)
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Ok(false);
        }
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as sets of permutations.
    pub fn same_elements(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.degree == other.degree
            && self.order()? == other.order()?
            && self.is_subgroup_of(other)?)
    }

    /// Orbits on `{1..degree}`, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit.into_iter().map(|x| x + 1).collect());
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Stabilizer of a 1-based point.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point == 0 || point > self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let elems = self.elements()?;
        let x = point - 1;
        let keep = parallel::filter_indices(elems.len(), |i| elems[i].apply(x) == x);
        let sub = keep.into_iter().map(|i| elems[i].clone()).collect();
        Ok(Self::from_sorted_elements(self.degree, sub, self.caps))
    }

    /// Points (1-based) fixed by every element.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| self.generators.iter().all(|g| g.apply(x) == x))
            .map(|x| x + 1)
            .collect()
    }

    /// Direct product acting on the disjoint union of the two domains; the
    /// second factor's points are shifted by `self.degree()`.
    pub fn direct_product(&self, other: &PermGroup) -> Result<PermGroup> {
        let (a, b) = (self.elements()?, other.elements()?);
        let cap = self.caps.elements;
        match a.len().checked_mul(b.len()) {
            Some(n) if n <= cap => {}
            _ => {
                return Err(Error::CapExceeded {
                    what: "direct product",
                    cap,
                })
            }
        }
        let degree = self.degree + other.degree;
        let generators = self
            .generators
            .iter()
            .map(|g| g.shifted(0, degree))
            .chain(
                other
                    .generators
                    .iter()
                    .map(|g| g.shifted(self.degree, degree)),
            )
            .collect();
        // (x, y) ↦ x ⊕ y is monotone in (x, y), so the nested loop is sorted.
        let mut elems = Vec::with_capacity(a.len() * b.len());
        for x in a.iter() {
            for y in b.iter() {
                let mut img = Vec::with_capacity(degree);
                img.extend_from_slice(x.images());
                img.extend(y.images().iter().map(|&v| v + self.degree as u32));
                elems.push(Permutation::from_images_unchecked(img));
            }
        }
        let g = PermGroup {
            degree,
            generators,
            caps: self.caps,
            elements: OnceLock::new(),
        };
        let _ = g.elements.set(Ok(Arc::new(elems)));
        Ok(g)
    }
}

/// Breadth-first closure under right multiplication by generators.
fn enumerate(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut elems = vec![id];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = elems[i].mul(g);
            if !seen.contains(&y) {
                if elems.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        cap,
                    });
                }
                seen.insert(y.clone());
                elems.push(y);
            }
        }
        i += 1;
    }
    drop(seen);
    elems.sort_unstable();
    Ok(elems)
}

fn greedy_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<usize> = Vec::new();
    let mut inside = table::close(elements, &gens);
    for i in 0..elements.len() {
        if !inside.contains(i) {
            gens.push(i);
            inside = table::close(elements, &gens);
            if inside.count_ones(..) == elements.len() {
                break;
            }
        }
    }
    gens.into_iter().map(|i| elements[i].clone()).collect()
}
