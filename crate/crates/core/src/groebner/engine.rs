//! Homogeneous Buchberger algorithm on sparse module vectors.
//!
//! Vectors are term lists sorted descending in a [`ModuleOrder`]. The run is
//! organised degree by degree: in each degree the S-pairs are reduced first,
//! then the input generators of that degree. Because everything is
//! homogeneous, an input is discarded exactly when it is a non-minimal
//! generator, and the S-pairs that reduce to zero (optionally tracked through
//! the representation of every basis element in terms of the inputs)
//! generate the syzygies of the retained inputs.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::order::ModuleOrder;
use crate::limits;
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<E> {
    pub m: Monomial,
    pub c: u32,
    pub k: E,
}

pub type TermVec<E> = Vec<Term<E>>;

/// `a + coef·mult·b` for term lists sorted in `order`.
pub fn merge_scaled<F: Field>(
    field: &F,
    order: &ModuleOrder,
    a: &[Term<F::Elem>],
    coef: &F::Elem,
    mult: &Monomial,
    b: &[Term<F::Elem>],
) -> TermVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bt: Option<Term<F::Elem>> = None;
    loop {
        if bt.is_none() && j < b.len() {
            let t = &b[j];
            bt = Some(Term {
                m: t.m.mul(mult),
                c: t.c,
                k: field.mul(&t.k, coef),
            });
            j += 1;
        }
        match (a.get(i), bt.as_ref()) {
            (None, None) => break,
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => out.push(bt.take().unwrap()),
            (Some(x), Some(y)) => match order.cmp(&x.m, x.c, &y.m, y.c) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => out.push(bt.take().unwrap()),
                Ordering::Equal => {
                    let s = field.add(&x.k, &y.k);
                    if !field.is_zero(&s) {
                        out.push(Term { m: x.m, c: x.c, k: s });
                    }
                    i += 1;
                    bt = None;
                }
            },
        }
    }
    out
}

pub fn scale_terms<F: Field>(field: &F, v: &mut [Term<F::Elem>], c: &F::Elem) {
    for t in v.iter_mut() {
        t.k = field.mul(&t.k, c);
    }
}

pub fn sort_terms<F: Field>(field: &F, order: &ModuleOrder, mut v: TermVec<F::Elem>) -> TermVec<F::Elem> {
    v.sort_by(|a, b| order.cmp(&b.m, b.c, &a.m, a.c));
    let mut out: TermVec<F::Elem> = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(l) if l.m == t.m && l.c == t.c => l.k = field.add(&l.k, &t.k),
            _ => out.push(t),
        }
    }
    out.retain(|t| !field.is_zero(&t.k));
    out
}

/// A basis element with its lead data and (when tracking) its expression in
/// the input generators.
#[derive(Clone, Debug)]
pub struct BasisElem<E> {
    pub v: TermVec<E>,
    pub lm: Monomial,
    pub lc: u32,
    pub deg: i32,
    pub repr: TermVec<E>,
}

#[derive(Clone, Copy, Debug)]
pub struct GbOptions {
    /// Track representations and collect S-pair syzygies.
    pub track: bool,
    /// Also record the syzygy produced by each discarded input.
    pub record_redundant: bool,
    /// Interreduce the final basis.
    pub interreduce: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            track: false,
            record_redundant: false,
            interreduce: true,
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    deg: i32,
}

/// A Gröbner basis under construction or finished.
#[derive(Clone, Debug)]
pub struct GbState<F: Field> {
    pub field: F,
    pub order: ModuleOrder,
    /// Order on the module of input coordinates, when tracking.
    pub e_order: Option<ModuleOrder>,
    pub basis: Vec<BasisElem<F::Elem>>,
    by_comp: Vec<Vec<usize>>,
    track: bool,
}

/// Everything a run produces besides the basis.
#[derive(Clone, Debug)]
pub struct GbRun<F: Field> {
    pub state: GbState<F>,
    /// Zero reductions of S-pairs, as vectors in input coordinates.
    pub syzygies: Vec<TermVec<F::Elem>>,
    /// Syzygies `e_j − (expression of input j)` for discarded inputs.
    pub redundant_syzygies: Vec<TermVec<F::Elem>>,
    /// Whether each input became a basis element.
    pub retained: Vec<bool>,
    pub input_degrees: Vec<i32>,
}

impl<F: Field> GbState<F> {
    pub fn new(field: F, order: ModuleOrder, e_order: Option<ModuleOrder>) -> Self {
        let rank = order.rank();
        let track = e_order.is_some();
        GbState {
            field,
            order,
            e_order,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            track,
        }
    }

    fn find_reducer(&self, m: &Monomial, c: u32) -> Option<usize> {
        self.by_comp[c as usize]
            .iter()
            .copied()
            .find(|&g| self.basis[g].lm.divides(m))
    }

    /// Reduces `v` (fully, or only its lead when `full` is false), updating
    /// `repr` by the same combination of basis representations.
    pub fn reduce(&self, v: TermVec<F::Elem>, repr: &mut TermVec<F::Elem>, full: bool) -> Result<TermVec<F::Elem>> {
        let field = &self.field;
        let mut done: TermVec<F::Elem> = Vec::new();
        let mut rest = v;
        let mut start = 0;
        let mut steps = 0u32;
        while start < rest.len() {
            let t = &rest[start];
            match self.find_reducer(&t.m, t.c) {
                None => {
                    if !full {
                        break;
                    }
                    done.push(rest[start].clone());
                    start += 1;
                }
                Some(g) => {
                    steps += 1;
                    if steps.is_multiple_of(64) {
                        limits::check()?;
                    }
                    let b = &self.basis[g];
                    let mult = b.lm.quotient_of(&t.m);
                    let coef = field.neg(&t.k);
                    rest = merge_scaled(field, &self.order, &rest[start + 1..], &coef, &mult, &b.v[1..]);
                    start = 0;
                    if self.track {
                        let eo = self.e_order.as_ref().unwrap();
                        *repr = merge_scaled(field, eo, repr, &coef, &mult, &b.repr);
                    }
                }
            }
        }
        if done.is_empty() {
            rest.drain(..start);
            return Ok(rest);
        }
        done.extend(rest.drain(start..));
        Ok(done)
    }

    /// Adds a nonzero reduced vector, made monic, and returns its index.
    fn insert(&mut self, mut v: TermVec<F::Elem>, mut repr: TermVec<F::Elem>) -> usize {
        let inv = self.field.inv(&v[0].k);
        if !self.field.is_one(&inv) {
            scale_terms(&self.field, &mut v, &inv);
            scale_terms(&self.field, &mut repr, &inv);
        }
        let lm = v[0].m;
        let lc = v[0].c;
        let deg = self.order.term_degree(&lm, lc);
        let idx = self.basis.len();
        self.basis.push(BasisElem { v, lm, lc, deg, repr });
        self.by_comp[lc as usize].push(idx);
        idx
    }

    /// Gebauer–Möller update after inserting `h`.
    fn update_pairs(&self, pairs: &mut Vec<Pair>, h: usize, product_criterion: bool) {
        let hb = &self.basis[h];
        let (hl, hc) = (hb.lm, hb.lc);
        let cands: Vec<(usize, Monomial, bool)> = self.by_comp[hc as usize]
            .iter()
            .copied()
            .filter(|&g| g != h)
            .map(|g| {
                let gl = &self.basis[g].lm;
                (g, gl.lcm(&hl), product_criterion && gl.gcd_is_one(&hl))
            })
            .collect();
        // 0 = still a candidate, 1 = kept, 2 = dropped
        let mut state = vec![0u8; cands.len()];
        for idx in 0..cands.len() {
            state[idx] = 3;
            let (_, l1, disjoint) = &cands[idx];
            let ok = *disjoint
                || !cands
                    .iter()
                    .enumerate()
                    .any(|(o, (_, l2, _))| o != idx && state[o] <= 1 && l2.divides(l1));
            state[idx] = if ok { 1 } else { 2 };
        }
        let basis = &self.basis;
        pairs.retain(|p| {
            !(p.comp == hc && hl.divides(&p.lcm) && basis[p.i].lm.lcm(&hl) != p.lcm && basis[p.j].lm.lcm(&hl) != p.lcm)
        });
        for (idx, (g, l, disjoint)) in cands.into_iter().enumerate() {
            if state[idx] == 1 && !disjoint {
                pairs.push(Pair {
                    i: g.min(h),
                    j: g.max(h),
                    lcm: l,
                    comp: hc,
                    deg: self.order.term_degree(&l, hc),
                });
            }
        }
    }

    fn spoly(&self, p: &Pair) -> (TermVec<F::Elem>, TermVec<F::Elem>) {
        let (a, b) = (&self.basis[p.i], &self.basis[p.j]);
        let ma = a.lm.quotient_of(&p.lcm);
        let mb = b.lm.quotient_of(&p.lcm);
        let mone = self.field.neg(&self.field.one());
        let scaled_a: TermVec<F::Elem> = a.v[1..]
            .iter()
            .map(|t| Term {
                m: t.m.mul(&ma),
                c: t.c,
                k: t.k.clone(),
            })
            .collect();
        let s = merge_scaled(&self.field, &self.order, &scaled_a, &mone, &mb, &b.v[1..]);
        let r = if self.track {
            let eo = self.e_order.as_ref().unwrap();
            let ra: TermVec<F::Elem> = a
                .repr
                .iter()
                .map(|t| Term {
                    m: t.m.mul(&ma),
                    c: t.c,
                    k: t.k.clone(),
                })
                .collect();
            merge_scaled(&self.field, eo, &ra, &mone, &mb, &b.repr)
        } else {
            Vec::new()
        };
        (s, r)
    }

    /// Fully reduces every basis tail against the others.
    fn interreduce(&mut self) -> Result<()> {
        for i in 0..self.basis.len() {
            let tail = self.basis[i].v[1..].to_vec();
            let mut repr = Vec::new();
            let red = self.reduce(tail, &mut repr, true)?;
            let b = &mut self.basis[i];
            let mut v = vec![b.v[0].clone()];
            v.extend(red);
            b.v = v;
            if self.track {
                let eo = self.e_order.as_ref().unwrap();
                let one = self.field.one();
                b.repr = merge_scaled(&self.field, eo, &b.repr, &one, &Monomial::one(b.lm.nvars()), &repr);
            }
        }
        Ok(())
    }

    /// Normal form of `v` and, when tracking, the coefficients `q` (in input
    /// coordinates) with `v = nf + Σ q_j input_j`.
    pub fn normal_form(&self, v: TermVec<F::Elem>) -> Result<(TermVec<F::Elem>, TermVec<F::Elem>)> {
        let mut repr = Vec::new();
        let nf = self.reduce(v, &mut repr, true)?;
        let mone = self.field.neg(&self.field.one());
        scale_terms(&self.field, &mut repr, &mone);
        Ok((nf, repr))
    }

    /// Lead terms of the basis.
    pub fn leads(&self) -> Vec<(Monomial, u32)> {
        self.basis.iter().map(|b| (b.lm, b.lc)).collect()
    }
}

/// Degree of a nonzero homogeneous term list; errors on mixed degrees.
pub fn vector_degree<E>(order: &ModuleOrder, v: &[Term<E>]) -> Result<Option<i32>> {
    let Some(first) = v.first() else {
        return Ok(None);
    };
    let d = order.term_degree(&first.m, first.c);
    if v.iter().any(|t| order.term_degree(&t.m, t.c) != d) {
        return Err(Error::Inhomogeneous("generator with terms of different degrees".into()));
    }
    Ok(Some(d))
}

/// Runs Buchberger's algorithm on homogeneous inputs.
///
/// `input_degrees` must give the degree of every input (it matters only for
/// zero inputs, whose degree cannot be read off). The inputs must be sorted in
/// `order`.
pub fn run<F: Field>(
    field: &F,
    nvars: usize,
    order: ModuleOrder,
    inputs: Vec<TermVec<F::Elem>>,
    input_degrees: Vec<i32>,
    opts: GbOptions,
) -> Result<GbRun<F>> {
    assert_eq!(inputs.len(), input_degrees.len());
    for (v, &d) in inputs.iter().zip(&input_degrees) {
        if let Some(vd) = vector_degree(&order, v)? {
            if vd != d {
                return Err(Error::Inhomogeneous(format!(
                    "generator of degree {vd} declared with degree {d}"
                )));
            }
        }
    }
    let e_order = if opts.track {
        if inputs.iter().any(|v| v.is_empty()) {
            Some(ModuleOrder::top(order.mono(), input_degrees.clone()))
        } else {
            let leads: Vec<(Monomial, u32)> = inputs.iter().map(|v| (v[0].m, v[0].c)).collect();
            Some(order.schreyer(&leads, input_degrees.clone()))
        }
    } else {
        None
    };
    let product_criterion = !opts.track && order.rank() == 1;
    let mut state = GbState::new(field.clone(), order, e_order);
    let mut pairs: Vec<Pair> = Vec::new();
    let mut syzygies = Vec::new();
    let mut redundant_syzygies = Vec::new();
    let mut retained = vec![false; inputs.len()];

    let mut pending: Vec<usize> = (0..inputs.len()).collect();
    pending.sort_by_key(|&i| (input_degrees[i], i));
    let mut inputs: Vec<Option<TermVec<F::Elem>>> = inputs.into_iter().map(Some).collect();
    let mut ip = 0;

    loop {
        let next_in = pending.get(ip).map(|&i| input_degrees[i]);
        let next_pair = pairs.iter().map(|p| p.deg).min();
        let d = match (next_in, next_pair) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        limits::check()?;

        let mut batch: Vec<Pair> = Vec::new();
        pairs.retain(|p| {
            if p.deg == d {
                batch.push(p.clone());
                false
            } else {
                true
            }
        });
        batch.sort_by_key(|p| (p.i, p.j));
        for p in &batch {
            let (s, mut r) = state.spoly(p);
            let red = state.reduce(s, &mut r, true)?;
            if red.is_empty() {
                if opts.track && !r.is_empty() {
                    syzygies.push(r);
                }
            } else {
                let h = state.insert(red, r);
                state.update_pairs(&mut pairs, h, product_criterion);
            }
        }

        while ip < pending.len() && input_degrees[pending[ip]] == d {
            let j = pending[ip];
            ip += 1;
            let v = inputs[j].take().unwrap();
            let mut r = if opts.track {
                vec![Term {
                    m: Monomial::one(nvars),
                    c: j as u32,
                    k: field.one(),
                }]
            } else {
                Vec::new()
            };
            let red = if v.is_empty() {
                v
            } else {
                state.reduce(v, &mut r, true)?
            };
            if red.is_empty() {
                if opts.track && opts.record_redundant {
                    redundant_syzygies.push(r);
                }
            } else {
                retained[j] = true;
                let h = state.insert(red, r);
                state.update_pairs(&mut pairs, h, product_criterion);
            }
        }
    }
    if opts.interreduce {
        state.interreduce()?;
    }
    Ok(GbRun {
        state,
        syzygies,
        redundant_syzygies,
        retained,
        input_degrees,
    })
}
