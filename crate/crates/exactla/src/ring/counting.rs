use super::{GcdDomain, Ring, RingSpec, Term};
use crate::error::Result;
use num_bigint::BigInt;
use std::cell::RefCell;
use std::ops::{Add, AddAssign};

/// Ring-operation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpStats {
    pub adds: u64,
    pub subs: u64,
    pub muls: u64,
    /// Divisions by integers and inversions.
    pub divs: u64,
    pub exact_divs: u64,
}

impl OpStats {
    pub fn total(&self) -> u64 {
        self.adds + self.subs + self.muls + self.divs + self.exact_divs
    }

    /// Additions plus subtractions.
    pub fn additive(&self) -> u64 {
        self.adds + self.subs
    }
}

impl Add for OpStats {
    type Output = OpStats;
    fn add(self, o: OpStats) -> OpStats {
        OpStats {
            adds: self.adds + o.adds,
            subs: self.subs + o.subs,
            muls: self.muls + o.muls,
            divs: self.divs + o.divs,
            exact_divs: self.exact_divs + o.exact_divs,
        }
    }
}

impl AddAssign for OpStats {
    fn add_assign(&mut self, o: OpStats) {
        *self = *self + o;
    }
}

#[derive(Default)]
struct Frame {
    stats: OpStats,
    max_bits: u64,
    track_bits: bool,
}

thread_local! {
    static FRAMES: RefCell<Vec<Frame>> = const { RefCell::new(Vec::new()) };
}

enum Op {
    Add,
    Sub,
    Mul,
    Div,
    ExactDiv,
}

fn tick(op: Op) -> bool {
    FRAMES.with(|f| {
        let mut frames = f.borrow_mut();
        match frames.last_mut() {
            None => false,
            Some(top) => {
                let s = &mut top.stats;
                match op {
                    Op::Add => s.adds += 1,
                    Op::Sub => s.subs += 1,
                    Op::Mul => s.muls += 1,
                    Op::Div => s.divs += 1,
                    Op::ExactDiv => s.exact_divs += 1,
                }
                top.track_bits
            }
        }
    })
}

fn observe_bits(bits: u64) {
    FRAMES.with(|f| {
        if let Some(top) = f.borrow_mut().last_mut() {
            top.max_bits = top.max_bits.max(bits);
        }
    })
}

struct FrameGuard {
    depth: usize,
}

impl FrameGuard {
    fn push(track_bits: bool) -> Self {
        FRAMES.with(|f| {
            let mut frames = f.borrow_mut();
            let inherit = frames.last().is_some_and(|t| t.track_bits);
            frames.push(Frame { track_bits: track_bits || inherit, ..Frame::default() });
            FrameGuard { depth: frames.len() }
        })
    }

    fn finish(self) -> (OpStats, u64) {
        let out = pop_frame(self.depth);
        std::mem::forget(self);
        out
    }
}

fn pop_frame(depth: usize) -> (OpStats, u64) {
    FRAMES.with(|f| {
        let mut frames = f.borrow_mut();
        debug_assert_eq!(frames.len(), depth);
        let frame = frames.pop().unwrap_or_default();
        if let Some(parent) = frames.last_mut() {
            parent.stats += frame.stats;
            parent.max_bits = parent.max_bits.max(frame.max_bits);
        }
        (frame.stats, frame.max_bits)
    })
}

impl Drop for FrameGuard {
    fn drop(&mut self) {
        pop_frame(self.depth);
    }
}

/// Run `f` and return the operations that [`Counted`] rings performed in it.
///
/// Scopes nest: an inner scope's counts are also added to the enclosing one.
pub fn with_counting<T>(f: impl FnOnce() -> T) -> (T, OpStats) {
    let guard = FrameGuard::push(false);
    let out = f();
    let (stats, _) = guard.finish();
    (out, stats)
}

/// Like [`with_counting`], also reporting the largest `bit_size` of any
/// counted operation's result.
pub fn with_counting_bits<T>(f: impl FnOnce() -> T) -> (T, OpStats, u64) {
    let guard = FrameGuard::push(true);
    let out = f();
    let (stats, bits) = guard.finish();
    (out, stats, bits)
}

/// Instrumented wrapper: same elements as `R`, every operation counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counted<R> {
    pub inner: R,
}

impl<R: Ring> Counted<R> {
    pub fn new(inner: R) -> Self {
        Counted { inner }
    }

    fn record(&self, op: Op, result: &R::Elem) {
        if tick(op) {
            observe_bits(self.inner.bit_size(result));
        }
    }
}

impl<R: Ring> Ring for Counted<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }
    fn one(&self) -> R::Elem {
        self.inner.one()
    }
    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        let r = self.inner.add(a, b);
        self.record(Op::Add, &r);
        r
    }
    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        let r = self.inner.sub(a, b);
        self.record(Op::Sub, &r);
        r
    }
    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        let r = self.inner.mul(a, b);
        self.record(Op::Mul, &r);
        r
    }
    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.inner.neg(a)
    }
    fn is_zero(&self, a: &R::Elem) -> bool {
        self.inner.is_zero(a)
    }
    fn is_one(&self, a: &R::Elem) -> bool {
        self.inner.is_one(a)
    }
    fn from_i64(&self, k: i64) -> R::Elem {
        self.inner.from_i64(k)
    }
    fn from_bigint(&self, k: &BigInt) -> R::Elem {
        self.inner.from_bigint(k)
    }
    fn spec(&self) -> RingSpec {
        self.inner.spec()
    }
    fn exact_div(&self, a: &R::Elem, b: &R::Elem) -> Result<R::Elem> {
        let r = self.inner.exact_div(a, b)?;
        self.record(Op::ExactDiv, &r);
        Ok(r)
    }
    fn div_by_integer(&self, a: &R::Elem, k: u64) -> Result<R::Elem> {
        let r = self.inner.div_by_integer(a, k)?;
        self.record(Op::Div, &r);
        Ok(r)
    }
    fn inv(&self, a: &R::Elem) -> Result<R::Elem> {
        let r = self.inner.inv(a)?;
        self.record(Op::Div, &r);
        Ok(r)
    }
    fn root_of_unity(&self, order: u64) -> Option<R::Elem> {
        self.inner.root_of_unity(order)
    }
    fn bit_size(&self, a: &R::Elem) -> u64 {
        self.inner.bit_size(a)
    }
    fn has_terms(&self, a: &R::Elem) -> bool {
        self.inner.has_terms(a)
    }
    fn to_terms(&self, a: &R::Elem) -> Vec<Term> {
        self.inner.to_terms(a)
    }
    fn from_terms(&self, terms: &[Term]) -> Result<R::Elem> {
        self.inner.from_terms(terms)
    }
    fn describe(&self) -> String {
        self.inner.describe()
    }
    fn format(&self, a: &R::Elem) -> String {
        self.inner.format(a)
    }
    fn parse(&self, s: &str) -> Result<R::Elem> {
        self.inner.parse(s)
    }
}

impl<R: GcdDomain> GcdDomain for Counted<R> {
    fn gcd(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.inner.gcd(a, b)
    }
    fn normal_unit(&self, a: &R::Elem) -> R::Elem {
        self.inner.normal_unit(a)
    }
}
