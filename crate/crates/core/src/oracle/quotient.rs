//! Degree-by-degree construction of `A = R/I` for a homogeneous ideal `I`.
//!
//! Each graded piece `A_d` is presented as the span of the monomials
//! `x_k * s` (`s` a standard monomial of degree `d-1`) modulo the linear
//! relations that hold in `A`:
//!
//! * `x_i * [x_j w] - x_j * [x_i w]` for standard `w` of degree `d-2`, where
//!   `[.]` is the normal form in `A_{d-1}`;
//! * every generator of degree `d`, rewritten onto those monomials.
//!
//! The kernel of `R_1 (x) A_{d-1} -> A_d` is spanned by exactly these, so the
//! dimension of `A_d` comes out of one exact row reduction over a space of
//! size about `n * dim A_{d-1}` instead of all monomials of degree `d`.
//! Pivots are chosen by degree-reverse-lex, so the free columns are the
//! standard monomials of that term order and form an order ideal.
//!
//! Arithmetic runs on `i64` fractions with overflow checks; on the first
//! overflow the whole computation restarts over big rationals.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use crate::error::{Error, Result};
use crate::poly::MvPoly;

type Key = Vec<u8>;
type Sparse<F> = Vec<(usize, F)>;
type Terms<F> = Vec<(Key, F)>;

/// Exact field arithmetic where any operation may report overflow as `None`.
trait Scalar: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_big(v: &BigRational) -> Option<Self>;
    fn to_big(&self) -> BigRational;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Multiplicative inverse of a nonzero value.
    fn inv(&self) -> Option<Self>;
    /// Image in `F_p`, or `None` if `p` divides the denominator.
    fn to_fp(&self) -> Option<Fp>;
    fn from_fraction(n: i64, d: i64) -> Option<Self>;

    /// `self - f * b`.
    fn sub_mul(&self, f: &Self, b: &Self) -> Option<Self> {
        self.add(&f.mul(b)?.neg()?)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_big(v: &BigRational) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigRational {
        self.clone()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn inv(&self) -> Option<Self> {
        Some(self.recip())
    }
    fn to_fp(&self) -> Option<Fp> {
        let p = BigInt::from(Fp::P);
        let residue = |v: &BigInt| u64::try_from(((v % &p) + &p) % &p).expect("residue below p");
        Fp(residue(self.numer())).mul(&Fp(residue(self.denom())).inv()?)
    }
    fn from_fraction(n: i64, d: i64) -> Option<Self> {
        Some(BigRational::new(n.into(), d.into()))
    }
}

type Small = Ratio<i64>;
type Wide = Ratio<i128>;

macro_rules! word_scalar {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn zero() -> Self {
                Zero::zero()
            }
            fn one() -> Self {
                One::one()
            }
            fn is_zero(&self) -> bool {
                *self.numer() == 0
            }
            fn from_big(v: &BigRational) -> Option<Self> {
                Some(Ratio::new(<$int>::try_from(v.numer()).ok()?, <$int>::try_from(v.denom()).ok()?))
            }
            fn to_big(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
            fn add(&self, o: &Self) -> Option<Self> {
                self.checked_add(o)
            }
            fn mul(&self, o: &Self) -> Option<Self> {
                self.checked_mul(o)
            }
            fn neg(&self) -> Option<Self> {
                Some(Ratio::new_raw(self.numer().checked_neg()?, *self.denom()))
            }
            fn inv(&self) -> Option<Self> {
                let (n, d) = (*self.numer(), *self.denom());
                if n < 0 {
                    Some(Ratio::new_raw(d.checked_neg()?, n.checked_neg()?))
                } else {
                    Some(Ratio::new_raw(d, n))
                }
            }
            fn to_fp(&self) -> Option<Fp> {
                let p = Fp::P as i128;
                let residue = |v: $int| Fp((v as i128).rem_euclid(p) as u64);
                residue(*self.numer()).mul(&residue(*self.denom()).inv()?)
            }
            fn from_fraction(n: i64, d: i64) -> Option<Self> {
                Some(Ratio::new(n.into(), d.into()))
            }
        }
    };
}

word_scalar!(i64);
word_scalar!(i128);

/// Residues modulo the prime `2^62 - 57`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Fp(u64);

impl Fp {
    const P: u64 = (1 << 62) - 57;

    fn pow(self, mut e: u64) -> Fp {
        let (mut acc, mut base) = (1u64, self.0);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base);
            }
            base = mul_mod(base, base);
            e >>= 1;
        }
        Fp(acc)
    }

    /// The fraction `a/b` with `|a|, b <= sqrt(p/2)` congruent to `self`, if any.
    fn reconstruct(self) -> Option<(i64, i64)> {
        let bound = ((Self::P / 2) as f64).sqrt() as i128;
        let (mut r0, mut r1) = (Self::P as i128, self.0 as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 > bound {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if t1.abs() > bound || num_integer::gcd(r1, t1) != 1 {
            return None;
        }
        let (a, b) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
        Some((a as i64, b as i64))
    }
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % Fp::P as u128) as u64
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_big(v: &BigRational) -> Option<Self> {
        v.to_fp()
    }
    fn to_big(&self) -> BigRational {
        BigRational::from_integer(self.0.into())
    }
    fn add(&self, o: &Self) -> Option<Self> {
        let s = self.0 + o.0;
        Some(Fp(if s >= Self::P { s - Self::P } else { s }))
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(Fp(mul_mod(self.0, o.0)))
    }
    fn neg(&self) -> Option<Self> {
        Some(Fp(if self.0 == 0 { 0 } else { Self::P - self.0 }))
    }
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(Self::P - 2))
    }
    fn to_fp(&self) -> Option<Fp> {
        Some(*self)
    }
    fn from_fraction(n: i64, d: i64) -> Option<Self> {
        let p = Self::P as i128;
        Fp((n as i128).rem_euclid(p) as u64).mul(&Fp((d as i128).rem_euclid(p) as u64).inv()?)
    }
}

/// Descending degrevlex among monomials of equal degree.
fn degrevlex_desc(a: &Key, b: &Key) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in a later variable means a larger monomial
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

fn times_var(m: &Key, k: usize) -> Key {
    let mut out = m.clone();
    out[k] += 1;
    out
}

/// Adds `v` into a sparse accumulator.
fn accumulate<F: Scalar>(acc: &mut HashMap<usize, F>, i: usize, v: F) -> Option<()> {
    match acc.get_mut(&i) {
        Some(e) => *e = e.add(&v)?,
        None => {
            acc.insert(i, v);
        }
    }
    Some(())
}

fn into_sorted<F: Scalar>(acc: HashMap<usize, F>) -> Sparse<F> {
    let mut out: Sparse<F> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

#[derive(Debug)]
struct Level<F> {
    basis: Vec<Key>,
    index: HashMap<Key, usize>,
    /// Normal forms of non-standard monomials seen so far, over `basis`.
    nf: HashMap<Key, Sparse<F>>,
}

impl<F> Default for Level<F> {
    fn default() -> Self {
        Level { basis: Vec::new(), index: HashMap::new(), nf: HashMap::new() }
    }
}

#[derive(Debug)]
struct Engine<F> {
    nvars: usize,
    gens: HashMap<usize, Vec<Terms<F>>>,
    levels: Vec<Level<F>>,
}

impl<F: Scalar> Engine<F> {
    fn new(source: &HashMap<usize, Vec<Terms<BigRational>>>, nvars: usize) -> Option<Self> {
        let mut gens = HashMap::new();
        for (&d, list) in source {
            let converted = list
                .iter()
                .map(|g| g.iter().map(|(k, c)| Some((k.clone(), F::from_big(c)?))).collect())
                .collect::<Option<Vec<Terms<F>>>>()?;
            gens.insert(d, converted);
        }
        let mut level0 = Level::default();
        if !source.contains_key(&0) {
            let one = vec![0u8; nvars];
            level0.index.insert(one.clone(), 0);
            level0.basis.push(one);
        }
        Some(Engine { nvars, gens, levels: vec![level0] })
    }

    fn extend_to(&mut self, d: usize) -> Option<()> {
        while self.levels.len() <= d {
            self.build_next()?;
        }
        Some(())
    }

    fn normal_form(&mut self, terms: &[(Key, BigRational)], d: usize) -> Option<Sparse<F>> {
        self.extend_to(d)?;
        let mut acc = HashMap::new();
        for (key, c) in terms {
            let c = F::from_big(c)?;
            for (i, v) in self.nf_of(d, key)? {
                accumulate(&mut acc, i, c.mul(&v)?)?;
            }
        }
        Some(into_sorted(acc))
    }

    fn nf_of(&mut self, d: usize, m: &Key) -> Option<Sparse<F>> {
        let level = &self.levels[d];
        if let Some(&i) = level.index.get(m) {
            return Some(vec![(i, F::one())]);
        }
        if let Some(v) = level.nf.get(m) {
            return Some(v.clone());
        }
        if d == 0 {
            // the constant monomial when 1 lies in the ideal
            return Some(Vec::new());
        }
        let k = m.iter().position(|&e| e > 0).expect("degree d > 0 monomial has a variable");
        let mut u = m.clone();
        u[k] -= 1;
        let below = self.nf_of(d - 1, &u)?;
        let mut acc = HashMap::new();
        for (s, c) in below {
            let xs = times_var(&self.levels[d - 1].basis[s], k);
            for (i, v) in self.nf_of(d, &xs)? {
                accumulate(&mut acc, i, c.mul(&v)?)?;
            }
        }
        let out = into_sorted(acc);
        self.levels[d].nf.insert(m.clone(), out.clone());
        Some(out)
    }

    fn build_next(&mut self) -> Option<()> {
        let d = self.levels.len();
        let n = self.nvars;
        let prev = &self.levels[d - 1];

        let mut cands: Vec<Key> = prev
            .basis
            .iter()
            .flat_map(|s| (0..n).map(move |k| times_var(s, k)))
            .collect();
        cands.sort_by(degrevlex_desc);
        cands.dedup();
        if cands.is_empty() {
            self.levels.push(Level::default());
            return Some(());
        }
        let col: HashMap<Key, usize> = cands.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let ncols = cands.len();
        let mut rows: Vec<HashMap<usize, F>> = Vec::new();

        if d >= 2 {
            let basis_w = self.levels[d - 2].basis.clone();
            for w in &basis_w {
                for j in 0..n {
                    let xjw = times_var(w, j);
                    let a = self.nf_of(d - 1, &xjw)?;
                    let a_std = self.levels[d - 1].index.contains_key(&xjw);
                    for i in 0..j {
                        let xiw = times_var(w, i);
                        let b_std = self.levels[d - 1].index.contains_key(&xiw);
                        if a_std && b_std {
                            continue;
                        }
                        let b = self.nf_of(d - 1, &xiw)?;
                        let prev_basis = &self.levels[d - 1].basis;
                        let mut row = HashMap::new();
                        for (s, c) in &a {
                            accumulate(&mut row, col[&times_var(&prev_basis[*s], i)], c.clone())?;
                        }
                        for (s, c) in &b {
                            accumulate(&mut row, col[&times_var(&prev_basis[*s], j)], c.neg()?)?;
                        }
                        rows.push(row);
                    }
                }
            }
        }

        if let Some(gens) = self.gens.get(&d).cloned() {
            for g in gens {
                let mut row = HashMap::new();
                for (m, c) in g {
                    if let Some(&ci) = col.get(&m) {
                        accumulate(&mut row, ci, c)?;
                        continue;
                    }
                    let k = m.iter().position(|&e| e > 0).expect("positive degree");
                    let mut u = m.clone();
                    u[k] -= 1;
                    for (s, v) in self.nf_of(d - 1, &u)? {
                        let xs = times_var(&self.levels[d - 1].basis[s], k);
                        accumulate(&mut row, col[&xs], c.mul(&v)?)?;
                    }
                }
                rows.push(row);
            }
        }

        let pivots = reduce(rows, ncols)?;

        // Free columns are the standard monomials.
        let mut level = Level::default();
        let mut free_pos = vec![usize::MAX; ncols];
        for (c, key) in cands.iter().enumerate() {
            if pivots[c].is_none() {
                free_pos[c] = level.basis.len();
                level.index.insert(key.clone(), level.basis.len());
                level.basis.push(key.clone());
            }
        }
        for (c, key) in cands.iter().enumerate() {
            if let Some(row) = &pivots[c] {
                let nf = row
                    .iter()
                    .filter(|(cc, _)| *cc != c)
                    .map(|(cc, v)| Some((free_pos[*cc], v.neg()?)))
                    .collect::<Option<Sparse<F>>>()?;
                level.nf.insert(key.clone(), nf);
            }
        }
        self.levels.push(level);
        Some(())
    }
}

enum Lift<F> {
    Done(Vec<Option<Sparse<F>>>),
    Overflow,
    Failed,
}

/// Reduced row echelon form of `rows` over `F`; `None` on overflow.
///
/// The form is first computed modulo a prime and lifted by rational
/// reconstruction. The lift is accepted only if every input row reduces to
/// zero against it exactly: then the input row space lies inside the lifted
/// one, and since the rank modulo a prime never exceeds the rank over `Q`,
/// the two spaces coincide. Otherwise the rows are eliminated exactly.
fn reduce<F: Scalar>(rows: Vec<HashMap<usize, F>>, ncols: usize) -> Option<Vec<Option<Sparse<F>>>> {
    match lift(&rows, ncols) {
        Lift::Done(pivots) => return Some(pivots),
        Lift::Overflow => return None,
        Lift::Failed => log::debug!("modular lift rejected; eliminating exactly"),
    }
    let mut work = Work::new(ncols);
    for row in rows {
        work.insert(row)?;
    }
    Some(work.finish())
}

fn lift<F: Scalar>(rows: &[HashMap<usize, F>], ncols: usize) -> Lift<F> {
    let mut modular: Work<Fp> = Work::new(ncols);
    for row in rows {
        let Some(image) = row.iter().map(|(c, v)| Some((*c, v.to_fp()?))).collect() else {
            return Lift::Failed;
        };
        modular.insert(image).expect("prime field arithmetic cannot overflow");
    }
    let mut pivots: Vec<Option<Sparse<F>>> = vec![None; ncols];
    for (c, row) in modular.finish().into_iter().enumerate() {
        let Some(row) = row else { continue };
        let mut lifted = Vec::with_capacity(row.len());
        for (cc, v) in row {
            let Some(value) = v.reconstruct().and_then(|(a, b)| F::from_fraction(a, b)) else {
                return Lift::Failed;
            };
            lifted.push((cc, value));
        }
        pivots[c] = Some(lifted);
    }
    for row in rows {
        let mut rest: HashMap<usize, F> = HashMap::new();
        for (c, v) in row {
            let step = match &pivots[*c] {
                None => accumulate(&mut rest, *c, v.clone()),
                Some(p) => p
                    .iter()
                    .skip(1)
                    .try_for_each(|(cc, w)| accumulate(&mut rest, *cc, F::zero().sub_mul(v, w)?)),
            };
            if step.is_none() {
                return Lift::Overflow;
            }
        }
        if rest.values().any(|v| !v.is_zero()) {
            return Lift::Failed;
        }
    }
    Lift::Done(pivots)
}

/// Incremental reduced row echelon form. Each pivot row starts with its
/// pivot entry `1`, and every other entry sits in a non-pivot column.
///
/// Keeping the rows fully reduced at every step keeps intermediate values as
/// small as the final normal forms.
struct Work<F> {
    pivots: Vec<Option<Sparse<F>>>,
    pivot_cols: Vec<usize>,
    dense: Vec<F>,
    queued: Vec<bool>,
    heap: BinaryHeap<Reverse<usize>>,
}

/// `p - f * r`, where `r` is sorted and `p` holds `r`'s leading column.
fn sub_scaled<F: Scalar>(p: &Sparse<F>, f: &F, r: &Sparse<F>) -> Option<Sparse<F>> {
    let mut out = Vec::with_capacity(p.len() + r.len());
    let (mut i, mut j) = (0, 0);
    while i < p.len() || j < r.len() {
        let next = match (p.get(i), r.get(j)) {
            (Some((a, va)), Some((b, vb))) if a == b => {
                i += 1;
                j += 1;
                (*a, va.sub_mul(f, vb)?)
            }
            (Some((a, va)), Some((b, _))) if a < b => {
                i += 1;
                (*a, va.clone())
            }
            (Some((a, va)), None) => {
                i += 1;
                (*a, va.clone())
            }
            (_, Some((b, vb))) => {
                j += 1;
                (*b, F::zero().sub_mul(f, vb)?)
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    Some(out)
}

impl<F: Scalar> Work<F> {
    fn new(ncols: usize) -> Self {
        Work {
            pivots: vec![None; ncols],
            pivot_cols: Vec::new(),
            dense: vec![F::zero(); ncols],
            queued: vec![false; ncols],
            heap: BinaryHeap::new(),
        }
    }

    fn touch(&mut self, c: usize) {
        if !self.queued[c] {
            self.queued[c] = true;
            self.heap.push(Reverse(c));
        }
    }

    /// Reduces a row against the current pivots and keeps it if anything is left.
    fn insert(&mut self, row: HashMap<usize, F>) -> Option<()> {
        for (c, v) in row {
            if !v.is_zero() {
                self.dense[c] = v;
                self.touch(c);
            }
        }
        let mut kept: Sparse<F> = Vec::new();
        while let Some(Reverse(c)) = self.heap.pop() {
            self.queued[c] = false;
            let v = std::mem::replace(&mut self.dense[c], F::zero());
            if v.is_zero() {
                continue;
            }
            let Some(p) = self.pivots[c].take() else {
                kept.push((c, v));
                continue;
            };
            // pivot rows are reduced, so this only touches non-pivot columns
            for (cc, w) in p.iter().skip(1) {
                self.dense[*cc] = self.dense[*cc].sub_mul(&v, w)?;
                self.touch(*cc);
            }
            self.pivots[c] = Some(p);
        }
        let Some((lead, lv)) = kept.first() else { return Some(()) };
        let lead = *lead;
        let inv = lv.inv()?;
        let row = kept
            .iter()
            .map(|(c, v)| Some((*c, v.mul(&inv)?)))
            .collect::<Option<Sparse<F>>>()?;
        for &c in &self.pivot_cols {
            let p = self.pivots[c].as_ref().expect("pivot column has a row");
            if let Ok(pos) = p.binary_search_by_key(&lead, |(cc, _)| *cc) {
                let f = p[pos].1.clone();
                let updated = sub_scaled(p, &f, &row)?;
                self.pivots[c] = Some(updated);
            }
        }
        self.pivots[lead] = Some(row);
        self.pivot_cols.push(lead);
        Some(())
    }

    fn finish(self) -> Vec<Option<Sparse<F>>> {
        self.pivots
    }
}

#[derive(Debug)]
enum Inner {
    Small(Engine<Small>),
    Wide(Engine<Wide>),
    Big(Engine<BigRational>),
}

macro_rules! with_engine {
    ($inner:expr, $e:ident => $body:expr) => {
        match $inner {
            Inner::Small($e) => $body,
            Inner::Wide($e) => $body,
            Inner::Big($e) => $body,
        }
    };
}

/// Graded pieces of `R/I`, extended one degree at a time.
#[derive(Debug)]
pub struct GradedQuotient {
    nvars: usize,
    /// Generators bucketed by degree, as `(exponents, coefficient)` terms.
    source: HashMap<usize, Vec<Terms<BigRational>>>,
    inner: Inner,
}

impl GradedQuotient {
    pub fn new(gens: &[MvPoly], nvars: usize) -> Result<Self> {
        let mut source: HashMap<usize, Vec<Terms<BigRational>>> = HashMap::new();
        for g in gens {
            if g.nvars() != nvars {
                return Err(Error::DimensionMismatch { left: nvars, right: g.nvars() });
            }
            if g.is_zero() {
                continue;
            }
            let d = g
                .homogeneous_degree()
                .ok_or_else(|| Error::NonHomogeneousGenerator(g.to_string()))?;
            let terms = g
                .terms()
                .map(|(m, c)| (m.exponents().iter().map(|&e| e as u8).collect(), c.clone()))
                .collect();
            source.entry(d as usize).or_default().push(terms);
        }
        let inner = Self::start(&source, nvars, 0);
        Ok(GradedQuotient { nvars, source, inner })
    }

    /// The cheapest engine at or above `tier` that can hold the generators.
    fn start(source: &HashMap<usize, Vec<Terms<BigRational>>>, nvars: usize, tier: u8) -> Inner {
        if tier == 0 {
            if let Some(e) = Engine::new(source, nvars) {
                return Inner::Small(e);
            }
        }
        if tier <= 1 {
            if let Some(e) = Engine::new(source, nvars) {
                return Inner::Wide(e);
            }
        }
        Inner::Big(Engine::new(source, nvars).expect("big rationals never overflow"))
    }

    /// Restarts one arithmetic tier up after an overflow.
    fn promote(&mut self) {
        let next = match self.inner {
            Inner::Small(_) => 1,
            _ => 2,
        };
        log::debug!("fractions overflowed at degree {}; restarting at tier {next}", self.computed_degree());
        self.inner = Self::start(&self.source, self.nvars, next);
    }

    /// Highest degree computed so far.
    pub fn computed_degree(&self) -> usize {
        with_engine!(&self.inner, e => e.levels.len() - 1)
    }

    pub fn extend_to(&mut self, d: usize) {
        while with_engine!(&mut self.inner, e => e.extend_to(d)).is_none() {
            self.promote();
        }
    }

    /// `dim_k (R/I)_d`, extending the computation as needed.
    pub fn dim(&mut self, d: usize) -> usize {
        self.extend_to(d);
        with_engine!(&self.inner, e => e.levels[d].basis.len())
    }

    /// Standard monomials of degree `d` as exponent vectors.
    pub fn basis(&mut self, d: usize) -> Vec<Vec<u32>> {
        self.extend_to(d);
        let basis = with_engine!(&self.inner, e => &e.levels[d].basis);
        basis.iter().map(|k| k.iter().map(|&e| e as u32).collect()).collect()
    }

    /// Normal form of a polynomial homogeneous of degree `d`, as coordinates over `basis(d)`.
    pub fn normal_form(&mut self, p: &MvPoly, d: usize) -> Vec<(usize, BigRational)> {
        let terms: Terms<BigRational> = p
            .terms()
            .map(|(m, c)| (m.exponents().iter().map(|&e| e as u8).collect(), c.clone()))
            .collect();
        loop {
            let nf = with_engine!(&mut self.inner, e => e
                .normal_form(&terms, d)
                .map(|nf| nf.iter().map(|(i, v)| (*i, v.to_big())).collect()));
            match nf {
                Some(nf) => return nf,
                None => self.promote(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{elementary_symmetric_all, Monomial};

    #[test]
    fn polynomial_ring_dims() {
        let mut q = GradedQuotient::new(&[], 3).unwrap();
        let dims: Vec<usize> = (0..5).map(|d| q.dim(d)).collect();
        assert_eq!(dims, vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn coinvariants_of_s3() {
        let gens: Vec<MvPoly> = (1..=3).map(|r| elementary_symmetric_all(r, 3)).collect();
        let mut q = GradedQuotient::new(&gens, 3).unwrap();
        let dims: Vec<usize> = (0..6).map(|d| q.dim(d)).collect();
        assert_eq!(dims, vec![1, 2, 2, 1, 0, 0]);
    }

    #[test]
    fn unit_ideal() {
        let mut q = GradedQuotient::new(&[MvPoly::one(2)], 2).unwrap();
        assert_eq!(q.dim(0), 0);
        assert_eq!(q.dim(3), 0);
    }

    #[test]
    fn normal_forms_reduce_generators() {
        let g = elementary_symmetric_all(1, 2);
        let mut q = GradedQuotient::new(&[g.clone()], 2).unwrap();
        assert!(q.normal_form(&g, 1).is_empty());
        let sq = MvPoly::from_monomial(Monomial::new(vec![0, 2]));
        assert_eq!(q.normal_form(&sq, 2).len(), 1);
    }

    #[test]
    fn word_and_big_arithmetic_agree() {
        let mut gens: Vec<MvPoly> = (1..=2).map(|r| elementary_symmetric_all(r, 4)).collect();
        gens.push(MvPoly::from_terms(4, [(3, Monomial::new(vec![2, 1, 0, 0])), (-7, Monomial::new(vec![0, 0, 1, 2]))]));
        let mut source = HashMap::new();
        for g in &gens {
            let terms: Terms<BigRational> = g
                .terms()
                .map(|(m, c)| (m.exponents().iter().map(|&e| e as u8).collect(), c.clone()))
                .collect();
            source.entry(g.homogeneous_degree().unwrap() as usize).or_insert_with(Vec::new).push(terms);
        }
        let mut small: Engine<Small> = Engine::new(&source, 4).unwrap();
        let mut big: Engine<BigRational> = Engine::new(&source, 4).unwrap();
        small.extend_to(7).unwrap();
        big.extend_to(7).unwrap();
        for d in 0..=7 {
            assert_eq!(small.levels[d].basis, big.levels[d].basis);
        }
    }

    #[test]
    fn overflow_moves_up_a_tier() {
        let wide = BigInt::from(i64::MAX) * BigInt::from(3);
        let big = &wide * &wide * &wide;
        for (c, tier) in [(wide, 1), (big, 2)] {
            let g = MvPoly::var(2, 0).scale(&BigRational::from_integer(c)).add(&MvPoly::var(2, 1)).unwrap();
            let mut q = GradedQuotient::new(&[g], 2).unwrap();
            let got = match q.inner {
                Inner::Small(_) => 0,
                Inner::Wide(_) => 1,
                Inner::Big(_) => 2,
            };
            assert_eq!(got, tier);
            assert_eq!((0..4).map(|d| q.dim(d)).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        }
        assert_eq!(Scalar::add(&Small::new(i64::MAX, 1), &Small::from_integer(1)), None);
    }

    #[test]
    fn rational_reconstruction() {
        for (a, b) in [(0, 1), (1, 1), (-3, 7), (12343, 678), (-1, 1_000_000)] {
            let v = Fp::from_fraction(a, b).unwrap();
            assert_eq!(v.reconstruct(), Some((a, b)));
        }
        assert_eq!(Fp(Fp::P - 1).add(&Fp(1)), Some(Fp(0)));
        assert_eq!(Fp(3).mul(&Fp(3).inv().unwrap()), Some(Fp(1)));
        // outside the bound a different small fraction can come back; it is
        // still congruent, which is why every lift is checked exactly
        let v = Fp::from_fraction(1, (1 << 40) + 15).unwrap();
        let (a, b) = v.reconstruct().unwrap();
        assert_ne!((a, b), (1, (1 << 40) + 15));
        assert_eq!(Fp::from_fraction(a, b), Some(v));
    }

    #[test]
    fn rejected_lift_falls_back_to_exact_elimination() {
        let c = BigRational::from_integer(BigInt::from(1u64 << 40));
        let g = MvPoly::var(2, 0).scale(&c).add(&MvPoly::var(2, 1)).unwrap();
        let rows: Vec<HashMap<usize, Small>> = vec![HashMap::from([(0, Small::from_integer(1 << 40)), (1, Small::from_integer(1))])];
        assert!(matches!(lift(&rows, 2), Lift::Failed));
        let pivots = reduce(rows, 2).unwrap();
        assert_eq!(pivots[0].as_ref().unwrap()[1].1, Small::new(1, 1 << 40));
        let mut q = GradedQuotient::new(&[g], 2).unwrap();
        assert_eq!((0..4).map(|d| q.dim(d)).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let p = MvPoly::var(2, 0).add(&MvPoly::one(2)).unwrap();
        assert!(matches!(GradedQuotient::new(&[p], 2), Err(Error::NonHomogeneousGenerator(_))));
    }
}
