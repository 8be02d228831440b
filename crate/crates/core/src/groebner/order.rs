//! Orders on the terms `m·e_c` of a graded free module.

use std::cmp::Ordering;

use crate::monomial::{Monomial, MonomialOrder};

/// A term order on a graded free module.
///
/// `Top` compares twist-adjusted degree, then the monomial order, then
/// position (lower index is larger). `Schreyer` is induced by a list of
/// lead terms in another module: `m·e_j` is compared through `m·lead_j`,
/// recursively down to a `Top` order, with ties broken by the chain of
/// indices that produced each basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    Top {
        mono: MonomialOrder,
        degrees: Vec<i32>,
    },
    Schreyer {
        mono: MonomialOrder,
        /// Degrees of the bottom module the images live in.
        base_degrees: Vec<i32>,
        /// Degrees of this module's basis.
        degrees: Vec<i32>,
        mtot: Vec<Monomial>,
        comp0: Vec<u32>,
        chain: Vec<Vec<u32>>,
    },
}

impl ModuleOrder {
    pub fn top(mono: MonomialOrder, degrees: Vec<i32>) -> Self {
        ModuleOrder::Top { mono, degrees }
    }

    pub fn degrees(&self) -> &[i32] {
        match self {
            ModuleOrder::Top { degrees, .. } | ModuleOrder::Schreyer { degrees, .. } => degrees,
        }
    }

    pub fn rank(&self) -> usize {
        self.degrees().len()
    }

    pub fn mono(&self) -> MonomialOrder {
        match self {
            ModuleOrder::Top { mono, .. } | ModuleOrder::Schreyer { mono, .. } => *mono,
        }
    }

    #[inline]
    pub fn term_degree(&self, m: &Monomial, c: u32) -> i32 {
        m.degree() as i32 + self.degrees()[c as usize]
    }

    #[inline]
    fn top_cmp(mono: MonomialOrder, degrees: &[i32], m1: &Monomial, c1: u32, m2: &Monomial, c2: u32) -> Ordering {
        let d1 = m1.degree() as i32 + degrees[c1 as usize];
        let d2 = m2.degree() as i32 + degrees[c2 as usize];
        if d1 != d2 {
            return d1.cmp(&d2);
        }
        match mono.cmp(m1, m2) {
            Ordering::Equal => c2.cmp(&c1),
            o => o,
        }
    }

    #[inline]
    pub fn cmp(&self, m1: &Monomial, c1: u32, m2: &Monomial, c2: u32) -> Ordering {
        match self {
            ModuleOrder::Top { mono, degrees } => Self::top_cmp(*mono, degrees, m1, c1, m2, c2),
            ModuleOrder::Schreyer {
                mono,
                base_degrees,
                mtot,
                comp0,
                chain,
                ..
            } => {
                let (i1, i2) = (c1 as usize, c2 as usize);
                let a = m1.mul(&mtot[i1]);
                let b = m2.mul(&mtot[i2]);
                match Self::top_cmp(*mono, base_degrees, &a, comp0[i1], &b, comp0[i2]) {
                    Ordering::Equal => chain[i2].cmp(&chain[i1]),
                    o => o,
                }
            }
        }
    }

    /// The order induced on a free module with basis `e_j ↦ leads[j]`, where
    /// the leads are terms of the module carrying `self`.
    pub fn schreyer(&self, leads: &[(Monomial, u32)], degrees: Vec<i32>) -> ModuleOrder {
        debug_assert_eq!(leads.len(), degrees.len());
        match self {
            ModuleOrder::Top { mono, degrees: base } => ModuleOrder::Schreyer {
                mono: *mono,
                base_degrees: base.clone(),
                degrees,
                mtot: leads.iter().map(|(m, _)| *m).collect(),
                comp0: leads.iter().map(|(_, c)| *c).collect(),
                chain: (0..leads.len()).map(|j| vec![j as u32]).collect(),
            },
            ModuleOrder::Schreyer {
                mono,
                base_degrees,
                mtot,
                comp0,
                chain,
                ..
            } => ModuleOrder::Schreyer {
                mono: *mono,
                base_degrees: base_degrees.clone(),
                degrees,
                mtot: leads.iter().map(|(m, c)| m.mul(&mtot[*c as usize])).collect(),
                comp0: leads.iter().map(|(_, c)| comp0[*c as usize]).collect(),
                chain: leads
                    .iter()
                    .enumerate()
                    .map(|(j, (_, c))| {
                        let mut ch = chain[*c as usize].clone();
                        ch.push(j as u32);
                        ch
                    })
                    .collect(),
            },
        }
    }

    /// The order restricted to the basis elements `keep` (increasing),
    /// renumbered `0..keep.len()`. Relative order of kept terms is unchanged.
    pub fn restrict(&self, keep: &[usize]) -> ModuleOrder {
        match self {
            ModuleOrder::Top { mono, degrees } => ModuleOrder::Top {
                mono: *mono,
                degrees: keep.iter().map(|&k| degrees[k]).collect(),
            },
            ModuleOrder::Schreyer {
                mono,
                base_degrees,
                degrees,
                mtot,
                comp0,
                chain,
            } => ModuleOrder::Schreyer {
                mono: *mono,
                base_degrees: base_degrees.clone(),
                degrees: keep.iter().map(|&k| degrees[k]).collect(),
                mtot: keep.iter().map(|&k| mtot[k]).collect(),
                comp0: keep.iter().map(|&k| comp0[k]).collect(),
                chain: keep.iter().map(|&k| chain[k].clone()).collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn top_uses_twists_then_position() {
        let o = ModuleOrder::top(MonomialOrder::Grevlex, vec![0, 1]);
        // x·e_0 has degree 1, 1·e_1 has degree 1; x beats 1 in the monomial order
        assert_eq!(o.cmp(&m(&[1, 0]), 0, &m(&[0, 0]), 1), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Less);
        let p = ModuleOrder::top(MonomialOrder::Grevlex, vec![0, 0]);
        assert_eq!(p.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Greater);
    }

    #[test]
    fn schreyer_compares_images() {
        let base = ModuleOrder::top(MonomialOrder::Grevlex, vec![0]);
        // e_0 ↦ x, e_1 ↦ y in S
        let s = base.schreyer(&[(m(&[1, 0]), 0), (m(&[0, 1]), 0)], vec![1, 1]);
        // y·e_0 ↦ xy, x·e_1 ↦ xy: tie broken by index
        assert_eq!(s.cmp(&m(&[0, 1]), 0, &m(&[1, 0]), 1), Ordering::Greater);
        // x·e_0 ↦ x^2 > xy
        assert_eq!(s.cmp(&m(&[1, 0]), 0, &m(&[1, 0]), 1), Ordering::Greater);
        let r = s.restrict(&[1]);
        assert_eq!(r.degrees(), &[1]);
    }
}
