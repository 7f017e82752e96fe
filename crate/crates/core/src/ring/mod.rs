//! Finite commutative rings with identity.
//!
//! Every ring enumerates its elements as indices `0..size` in canonical
//! order: residues ascending for `Z/n`; coefficient vectors compared from
//! the highest basis coordinate down (so `0, 1, x, 1+x` in `GF(2)[x]/(x^2)`);
//! product tuples lexicographically, first factor most significant.
//! Index `0` is always the zero element.

mod ideal;
mod idempotent;
mod literal;
pub mod spec;

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub use ideal::Ideal;
pub use idempotent::IdempotentDecomposition;
pub use spec::{parse_ring_spec, RingSpec};

/// A ring element, identified by its canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Resource guards. Exceeding any of them is an explicit error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_ring_size: usize,
    /// Largest ring whose full ideal lattice may be enumerated.
    pub max_lattice_size: usize,
    /// Largest `|R|^k` a presentation on `k` generators may expand to.
    pub max_module_tuples: usize,
    /// Largest `|N|^k` candidate space for homomorphism enumeration.
    pub max_hom_candidates: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring_size: 4096,
            max_lattice_size: 1024,
            max_module_tuples: 65536,
            max_hom_candidates: 1 << 24,
        }
    }
}

pub const DEFAULT_SEED: u64 = 0x5_eed0_fa11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub limits: Limits,
    /// Seed for sampled axiom checks on rings above the exhaustive threshold.
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            limits: Limits::default(),
            seed: DEFAULT_SEED,
        }
    }
}

/// Rings at most this large get exhaustive axiom verification.
pub const EXHAUSTIVE_AXIOMS: usize = 64;
/// Number of sampled triples above [`EXHAUSTIVE_AXIOMS`].
pub const AXIOM_SAMPLES: usize = 512;

const TABLE_LIMIT: usize = 256;

/// Classification of a single element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementKind {
    Unit,
    ZeroDivisor,
    Zero,
}

enum Repr {
    Zmod(u32),
    Poly {
        base: Ring,
        var: String,
        /// Monic, constant term first; length `deg + 1`.
        modulus: Vec<Elem>,
    },
    Sc {
        n: u32,
        dim: usize,
        table: Vec<u32>,
    },
    Product(Vec<Ring>),
    /// `eR` for an idempotent `e` of `parent`, with unit `e`.
    Corner {
        parent: Ring,
        members: Vec<Elem>,
        index: Vec<u32>,
    },
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
}

struct RingInner {
    repr: Repr,
    size: usize,
    one: Elem,
    spec: Option<RingSpec>,
    label: String,
    limits: Limits,
    tables: Option<Tables>,
    neg: Vec<u32>,
    inverses: OnceLock<Vec<Option<Elem>>>,
    local: OnceLock<bool>,
    lattice: OnceLock<Result<Vec<ideal::IdealData>>>,
}

/// A realized finite commutative ring. Cloning is cheap; equality is identity.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({}, |R|={})", self.0.label, self.0.size)
    }
}

fn digits(mut idx: usize, radix: usize, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % radix) as u32);
        idx /= radix;
    }
    out
}

fn undigits(ds: impl DoubleEndedIterator<Item = u32>, radix: usize) -> usize {
    ds.rev().fold(0, |acc, d| acc * radix + d as usize)
}

impl Ring {
    /// Builds a ring from a spec with default guards.
    pub fn from_spec(spec: &RingSpec) -> Result<Ring> {
        Ring::build(spec, &BuildOptions::default())
    }

    /// Parses and builds in one step.
    pub fn parse(text: &str) -> Result<Ring> {
        Ring::from_spec(&parse_ring_spec(text)?)
    }

    pub fn build(spec: &RingSpec, opts: &BuildOptions) -> Result<Ring> {
        spec.validate()?;
        let limit = opts.limits.max_ring_size;
        match spec.cardinality() {
            Some(c) if c <= limit as u128 => {}
            Some(c) => return Err(Error::guard("ring", c, limit as u128)),
            None => return Err(Error::guard("ring", u128::MAX, limit as u128)),
        }
        let ring = Ring::build_unchecked(spec, opts)?;
        ring.verify_axioms(opts.seed)?;
        Ok(ring)
    }

    fn build_unchecked(spec: &RingSpec, opts: &BuildOptions) -> Result<Ring> {
        let (repr, size) = match spec {
            RingSpec::Zmod(n) => {
                let n =
                    u32::try_from(*n).map_err(|_| Error::Validation("modulus too large".into()))?;
                (Repr::Zmod(n), n as usize)
            }
            RingSpec::PolyQuotient { base, var, modulus } => {
                let base = Ring::build_unchecked(base, opts)?;
                let modulus: Vec<Elem> = modulus.iter().map(|&c| base.from_int(c)).collect();
                if *modulus.last().unwrap() != base.one() {
                    return Err(Error::Validation("quotient modulus must be monic".into()));
                }
                let size = base.size().pow(modulus.len() as u32 - 1);
                (
                    Repr::Poly {
                        base,
                        var: var.clone(),
                        modulus,
                    },
                    size,
                )
            }
            RingSpec::StructureConstants {
                modulus,
                dim,
                table,
                unit: _,
            } => {
                let n = u32::try_from(*modulus)
                    .map_err(|_| Error::Validation("modulus too large".into()))?;
                let table = table
                    .iter()
                    .map(|&c| c.rem_euclid(n as i64) as u32)
                    .collect();
                (
                    Repr::Sc {
                        n,
                        dim: *dim,
                        table,
                    },
                    (n as usize).pow(*dim as u32),
                )
            }
            RingSpec::Product(fs) => {
                let factors = fs
                    .iter()
                    .map(|f| Ring::build_unchecked(f, opts))
                    .collect::<Result<Vec<_>>>()?;
                let size = factors.iter().map(Ring::size).product();
                (Repr::Product(factors), size)
            }
        };
        let one = match (spec, &repr) {
            (RingSpec::StructureConstants { unit, .. }, Repr::Sc { n, .. }) => Elem(undigits(
                unit.iter().map(|&c| c.rem_euclid(*n as i64) as u32),
                *n as usize,
            )
                as u32),
            _ => Ring::structural_one(&repr),
        };
        Ok(Ring::finish(
            repr,
            size,
            one,
            Some(spec.clone()),
            spec.to_string(),
            opts.limits,
        ))
    }

    fn structural_one(repr: &Repr) -> Elem {
        match repr {
            Repr::Zmod(_) => Elem(1),
            Repr::Poly { base, .. } => base.one(),
            Repr::Sc { .. } => unreachable!("structure-constant unit comes from the spec"),
            Repr::Product(fs) => Elem(
                fs.iter()
                    .fold(0usize, |acc, f| acc * f.size() + f.one().index()) as u32,
            ),
            Repr::Corner { .. } => unreachable!("corner unit is its idempotent"),
        }
    }

    fn finish(
        repr: Repr,
        size: usize,
        one: Elem,
        spec: Option<RingSpec>,
        label: String,
        limits: Limits,
    ) -> Ring {
        let mut inner = RingInner {
            repr,
            size,
            one,
            spec,
            label,
            limits,
            tables: None,
            neg: Vec::new(),
            inverses: OnceLock::new(),
            local: OnceLock::new(),
            lattice: OnceLock::new(),
        };
        inner.neg = (0..size)
            .map(|a| Ring::neg_structural(&inner.repr, size, a as u32))
            .collect();
        if size <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size as u32 {
                for b in 0..size as u32 {
                    add.push(Ring::add_structural(&inner.repr, a, b) as u16);
                    mul.push(Ring::mul_structural(&inner.repr, a, b) as u16);
                }
            }
            inner.tables = Some(Tables { add, mul });
        }
        Ring(Arc::new(inner))
    }

    fn add_structural(repr: &Repr, a: u32, b: u32) -> u32 {
        match repr {
            Repr::Zmod(n) => ((a as u64 + b as u64) % *n as u64) as u32,
            Repr::Poly { base, modulus, .. } => {
                let (bs, d) = (base.size(), modulus.len() - 1);
                let (x, y) = (digits(a as usize, bs, d), digits(b as usize, bs, d));
                undigits(
                    x.iter()
                        .zip(&y)
                        .map(|(&p, &q)| base.add(Elem(p), Elem(q)).0),
                    bs,
                ) as u32
            }
            Repr::Sc { n, dim, .. } => {
                let (x, y) = (
                    digits(a as usize, *n as usize, *dim),
                    digits(b as usize, *n as usize, *dim),
                );
                undigits(x.iter().zip(&y).map(|(&p, &q)| (p + q) % n), *n as usize) as u32
            }
            Repr::Product(fs) => Ring::product_zip(fs, a, b, |f, p, q| f.add(p, q)),
            Repr::Corner {
                parent,
                members,
                index,
            } => index[parent.add(members[a as usize], members[b as usize]).index()],
        }
    }

    fn mul_structural(repr: &Repr, a: u32, b: u32) -> u32 {
        match repr {
            Repr::Zmod(n) => ((a as u64 * b as u64) % *n as u64) as u32,
            Repr::Poly { base, modulus, .. } => {
                let (bs, d) = (base.size(), modulus.len() - 1);
                let (x, y) = (digits(a as usize, bs, d), digits(b as usize, bs, d));
                let mut prod = vec![Elem::ZERO; 2 * d - 1];
                for (i, &p) in x.iter().enumerate() {
                    if p == 0 {
                        continue;
                    }
                    for (j, &q) in y.iter().enumerate() {
                        let t = base.mul(Elem(p), Elem(q));
                        prod[i + j] = base.add(prod[i + j], t);
                    }
                }
                for top in (d..prod.len()).rev() {
                    let c = prod[top];
                    if c == Elem::ZERO {
                        continue;
                    }
                    for (i, &m) in modulus[..d].iter().enumerate() {
                        let t = base.mul(c, m);
                        let k = top - d + i;
                        prod[k] = base.sub(prod[k], t);
                    }
                    prod[top] = Elem::ZERO;
                }
                undigits(prod[..d].iter().map(|e| e.0), bs) as u32
            }
            Repr::Sc { n, dim, table } => {
                let (n, dim) = (*n as u64, *dim);
                let (x, y) = (
                    digits(a as usize, n as usize, dim),
                    digits(b as usize, n as usize, dim),
                );
                let mut out = vec![0u64; dim];
                for i in 0..dim {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..dim {
                        if y[j] == 0 {
                            continue;
                        }
                        let c = x[i] as u64 * y[j] as u64 % n;
                        let row = &table[(i * dim + j) * dim..(i * dim + j + 1) * dim];
                        for (o, &t) in out.iter_mut().zip(row) {
                            *o = (*o + c * t as u64) % n;
                        }
                    }
                }
                undigits(out.into_iter().map(|v| v as u32), n as usize) as u32
            }
            Repr::Product(fs) => Ring::product_zip(fs, a, b, |f, p, q| f.mul(p, q)),
            Repr::Corner {
                parent,
                members,
                index,
            } => index[parent.mul(members[a as usize], members[b as usize]).index()],
        }
    }

    fn neg_structural(repr: &Repr, size: usize, a: u32) -> u32 {
        match repr {
            Repr::Zmod(n) => (*n - a) % *n,
            Repr::Poly { base, modulus, .. } => {
                let (bs, d) = (base.size(), modulus.len() - 1);
                undigits(
                    digits(a as usize, bs, d)
                        .into_iter()
                        .map(|p| base.neg(Elem(p)).0),
                    bs,
                ) as u32
            }
            Repr::Sc { n, dim, .. } => undigits(
                digits(a as usize, *n as usize, *dim)
                    .into_iter()
                    .map(|p| (n - p) % n),
                *n as usize,
            ) as u32,
            Repr::Product(fs) => {
                let parts = Ring::split_product(fs, a);
                Ring::join_product(fs, parts.iter().zip(fs).map(|(&p, f)| f.neg(p)))
            }
            Repr::Corner {
                parent,
                members,
                index,
            } => {
                debug_assert!((a as usize) < size);
                index[parent.neg(members[a as usize]).index()]
            }
        }
    }

    fn split_product(fs: &[Ring], mut a: u32) -> Vec<Elem> {
        let mut parts = vec![Elem::ZERO; fs.len()];
        for (slot, f) in parts.iter_mut().zip(fs).rev() {
            *slot = Elem(a % f.size() as u32);
            a /= f.size() as u32;
        }
        parts
    }

    fn join_product(fs: &[Ring], parts: impl Iterator<Item = Elem>) -> u32 {
        parts
            .zip(fs)
            .fold(0usize, |acc, (p, f)| acc * f.size() + p.index()) as u32
    }

    fn product_zip(fs: &[Ring], a: u32, b: u32, op: impl Fn(&Ring, Elem, Elem) -> Elem) -> u32 {
        let (x, y) = (Ring::split_product(fs, a), Ring::split_product(fs, b));
        Ring::join_product(
            fs,
            x.iter().zip(&y).zip(fs).map(|((&p, &q), f)| op(f, p, q)),
        )
    }

    /// Exhaustive below [`EXHAUSTIVE_AXIOMS`] elements, sampled above.
    fn verify_axioms(&self, seed: u64) -> Result<()> {
        let one = self.one();
        for a in self.elements() {
            if self.mul(one, a) != a {
                return Err(Error::AxiomViolation(format!(
                    "1 * {} != {}",
                    self.fmt_elem(a),
                    self.fmt_elem(a)
                )));
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            let show = |e| self.fmt_elem(e);
            if self.mul(a, b) != self.mul(b, a) {
                return Err(Error::AxiomViolation(format!(
                    "{} * {} is not commutative",
                    show(a),
                    show(b)
                )));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::AxiomViolation(format!(
                    "({} * {}) * {} is not associative",
                    show(a),
                    show(b),
                    show(c)
                )));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(Error::AxiomViolation(format!(
                    "{} * ({} + {}) is not distributive",
                    show(a),
                    show(b),
                    show(c)
                )));
            }
            Ok(())
        };
        let n = self.size();
        if n <= EXHAUSTIVE_AXIOMS {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..AXIOM_SAMPLES {
                let mut pick = || Elem(rng.gen_range(0..n as u32));
                let (a, b, c) = (pick(), pick(), pick());
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    /// The ring `eR` with identity `e`, for an idempotent `e`.
    pub(crate) fn corner(&self, e: Elem) -> Ring {
        let mut members: Vec<Elem> = self.elements().map(|x| self.mul(e, x)).collect();
        members.sort_unstable();
        members.dedup();
        let mut index = vec![u32::MAX; self.size()];
        for (i, m) in members.iter().enumerate() {
            index[m.index()] = i as u32;
        }
        let one = Elem(index[e.index()]);
        let size = members.len();
        let label = format!("{}*R in {}", self.fmt_elem(e), self.label());
        Ring::finish(
            Repr::Corner {
                parent: self.clone(),
                members,
                index,
            },
            size,
            one,
            None,
            label,
            self.limits(),
        )
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.0.size
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        self.0.one
    }

    pub fn limits(&self) -> Limits {
        self.0.limits
    }

    pub fn spec(&self) -> Option<&RingSpec> {
        self.0.spec.as_ref()
    }

    /// The canonical spec text, or a description for derived rings.
    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.size as u32).map(Elem)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.index() < self.size()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.add[a.index() * self.0.size + b.index()] as u32),
            None => Elem(Ring::add_structural(&self.0.repr, a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.mul[a.index() * self.0.size + b.index()] as u32),
            None => Elem(Ring::mul_structural(&self.0.repr, a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `n * 1`.
    pub fn from_int(&self, n: i64) -> Elem {
        let mut acc = Elem::ZERO;
        let mut base = self.one();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        if n < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    fn inverses(&self) -> &[Option<Elem>] {
        self.0.inverses.get_or_init(|| {
            let one = self.one();
            self.elements()
                .map(|a| self.elements().find(|&b| self.mul(a, b) == one))
                .collect()
        })
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.inverses()[a.index()]
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// In a finite ring every nonzero element is a unit or a zero divisor.
    pub fn element_kind(&self, a: Elem) -> ElementKind {
        if a == Elem::ZERO {
            ElementKind::Zero
        } else if self.is_unit(a) {
            ElementKind::Unit
        } else {
            debug_assert!(self
                .elements()
                .any(|b| b != Elem::ZERO && self.mul(a, b) == Elem::ZERO));
            ElementKind::ZeroDivisor
        }
    }

    pub fn nonunits(&self) -> Vec<Elem> {
        self.elements().filter(|&a| !self.is_unit(a)).collect()
    }

    /// Locality via closure of the non-units under addition.
    pub fn nonunits_closed_under_addition(&self) -> bool {
        *self.0.local.get_or_init(|| {
            let nu = self.nonunits();
            nu.iter()
                .all(|&a| nu.iter().all(|&b| !self.is_unit(self.add(a, b))))
        })
    }

    /// For a ring built as `eR` inside another, the ambient ring and the
    /// embedding of each element; `None` for rings built from a spec.
    pub fn parent_embedding(&self) -> Option<(&Ring, &[Elem])> {
        match &self.0.repr {
            Repr::Corner {
                parent, members, ..
            } => Some((parent, members)),
            _ => None,
        }
    }
}
