//! Ring construction recipes and their ASCII grammar.
//!
//! ```text
//! spec   := factor ('x' factor)*
//! factor := atom ('[' var ']' '/' '(' poly ')')*
//! atom   := 'Z/' int | 'GF(' int ['^' int] ')'
//!         | 'SC(' int ';' int ';' ints ';' ints ')' | '(' spec ')'
//! ```
//!
//! Whitespace is insignificant everywhere.

use std::fmt;

use crate::error::{Error, Result};

/// Construction recipe for a finite commutative ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// Integers modulo `n`.
    Zmod(u64),
    /// `base[var]/(modulus)`; `modulus` holds integer coefficients,
    /// constant term first, read as multiples of the base identity.
    PolyQuotient {
        base: Box<RingSpec>,
        var: String,
        modulus: Vec<i64>,
    },
    /// A free `Z/modulus`-module of rank `dim` with multiplication
    /// `b_i * b_j = sum_k table[(i*dim + j)*dim + k] b_k`.
    StructureConstants {
        modulus: u64,
        dim: usize,
        table: Vec<i64>,
        unit: Vec<i64>,
    },
    /// Finite direct product; never nested.
    Product(Vec<RingSpec>),
}

/// Conway polynomials (constant term first) backing the `GF(p^k)` sugar.
const CONWAY: &[(u64, u32, &[i64])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

/// Variable name used for the generator of `GF(p^k)`.
pub const GF_VAR: &str = "a";

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl RingSpec {
    pub fn zmod(n: u64) -> Self {
        RingSpec::Zmod(n)
    }

    /// `base[var]/(modulus)`, coefficients constant term first.
    pub fn poly(base: RingSpec, var: &str, modulus: &[i64]) -> Self {
        let mut modulus = modulus.to_vec();
        while modulus.last() == Some(&0) {
            modulus.pop();
        }
        RingSpec::PolyQuotient {
            base: Box::new(base),
            var: var.to_string(),
            modulus,
        }
    }

    /// `GF(p^k)` from the shipped Conway table; `GF(p)` is `Z/p`.
    pub fn gf(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("GF({p}^{k}): {p} is not prime")));
        }
        if k == 0 {
            return Err(Error::Validation("GF exponent must be at least 1".into()));
        }
        if k == 1 {
            return Ok(RingSpec::Zmod(p));
        }
        CONWAY
            .iter()
            .find(|(q, e, _)| *q == p && *e == k)
            .map(|(_, _, c)| RingSpec::poly(RingSpec::Zmod(p), GF_VAR, c))
            .ok_or_else(|| {
                Error::Validation(format!(
                    "GF({p}^{k}) is outside the shipped table (order <= 64)"
                ))
            })
    }

    /// `GF(q)` for a prime power `q`.
    pub fn gf_order(q: u64) -> Result<Self> {
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
        let (mut rest, mut k) = (q, 0u32);
        while rest > 1 && rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if q < 2 || rest != 1 {
            return Err(Error::Validation(format!(
                "GF({q}): {q} is not a prime power"
            )));
        }
        RingSpec::gf(p, k)
    }

    pub fn structure_constants(modulus: u64, dim: usize, table: Vec<i64>, unit: Vec<i64>) -> Self {
        RingSpec::StructureConstants {
            modulus,
            dim,
            table,
            unit,
        }
    }

    /// Product with nested products flattened left to right.
    pub fn product(factors: impl IntoIterator<Item = RingSpec>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        RingSpec::Product(flat)
    }

    /// The local ring `GF(2){1,x,y | x^2 = xy = y^2 = 0}`, basis `b0 = 1, b1 = x, b2 = y`.
    pub fn gf2_square_zero_plane() -> Self {
        let dim = 3;
        let mut table = vec![0; dim * dim * dim];
        for j in 0..dim {
            table[j * dim + j] = 1; // b0 * bj = bj
            table[(j * dim) * dim + j] = 1; // bj * b0 = bj
        }
        RingSpec::structure_constants(2, dim, table, vec![1, 0, 0])
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> u64 {
        match self {
            RingSpec::Zmod(n) => *n,
            RingSpec::PolyQuotient { base, .. } => base.characteristic(),
            RingSpec::StructureConstants { modulus, .. } => *modulus,
            RingSpec::Product(fs) => fs.iter().fold(1, |acc, f| {
                let c = f.characteristic();
                acc / gcd(acc, c) * c
            }),
        }
    }

    /// Number of elements, or `None` on overflow.
    pub fn cardinality(&self) -> Option<u128> {
        match self {
            RingSpec::Zmod(n) => Some(*n as u128),
            RingSpec::PolyQuotient { base, modulus, .. } => {
                let b = base.cardinality()?;
                let deg = modulus.len().checked_sub(1)? as u32;
                b.checked_pow(deg)
            }
            RingSpec::StructureConstants { modulus, dim, .. } => {
                (*modulus as u128).checked_pow(*dim as u32)
            }
            RingSpec::Product(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.cardinality()?)),
        }
    }

    /// Structural checks that need no arithmetic.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::Zmod(n) if *n < 2 => Err(Error::Validation(format!(
                "Z/{n}: modulus must be at least 2"
            ))),
            RingSpec::Zmod(_) => Ok(()),
            RingSpec::PolyQuotient { base, var, modulus } => {
                base.validate()?;
                if var.is_empty() || !var.chars().next().unwrap().is_ascii_alphabetic() {
                    return Err(Error::Validation(format!("bad variable name {var:?}")));
                }
                if modulus.len() < 2 {
                    return Err(Error::Validation(
                        "quotient modulus must have degree at least 1".into(),
                    ));
                }
                let lead = *modulus.last().unwrap();
                let ch = base.characteristic() as i128;
                if (lead as i128 - 1).rem_euclid(ch) != 0 {
                    return Err(Error::Validation(format!(
                        "quotient modulus must be monic (leading coefficient {lead})"
                    )));
                }
                Ok(())
            }
            RingSpec::StructureConstants {
                modulus,
                dim,
                table,
                unit,
            } => {
                if *modulus < 2 {
                    return Err(Error::Validation("SC modulus must be at least 2".into()));
                }
                if *dim < 1 {
                    return Err(Error::Validation("SC dimension must be at least 1".into()));
                }
                if table.len() != dim * dim * dim {
                    return Err(Error::Validation(format!(
                        "SC table has {} entries, expected {}",
                        table.len(),
                        dim * dim * dim
                    )));
                }
                if unit.len() != *dim {
                    return Err(Error::Validation(format!(
                        "SC unit has {} entries, expected {dim}",
                        unit.len()
                    )));
                }
                Ok(())
            }
            RingSpec::Product(fs) => {
                if fs.is_empty() {
                    return Err(Error::Validation("empty product".into()));
                }
                fs.iter().try_for_each(RingSpec::validate)
            }
        }
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, var: &str, coeffs: &[i64]) -> fmt::Result {
    let mut first = true;
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let (neg, mag) = (c < 0, c.unsigned_abs());
        if neg {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        match (deg, mag) {
            (0, m) => write!(f, "{m}")?,
            (1, 1) => write!(f, "{var}")?,
            (1, m) => write!(f, "{m}*{var}")?,
            (d, 1) => write!(f, "{var}^{d}")?,
            (d, m) => write!(f, "{m}*{var}^{d}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "Z/{n}"),
            RingSpec::PolyQuotient { base, var, modulus } => {
                if matches!(**base, RingSpec::Product(_)) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                write!(f, "[{var}]/(")?;
                write_poly(f, var, modulus)?;
                f.write_str(")")
            }
            RingSpec::StructureConstants {
                modulus,
                dim,
                table,
                unit,
            } => write!(f, "SC({modulus}; {dim}; {}; {})", join(table), join(unit)),
            RingSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ring_spec(s)
    }
}

/// Parses the ring-spec grammar; products are flattened and the result validated.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut cur = Cursor::new(text)?;
    let spec = cur.spec()?;
    cur.skip_ws();
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "unexpected trailing input"));
    }
    spec.validate()?;
    Ok(spec)
}

/// Byte cursor over ASCII input with whitespace skipping.
pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Result<Self> {
        if let Some(i) = text.bytes().position(|b| !b.is_ascii()) {
            return Err(Error::parse(i, "non-ASCII input"));
        }
        Ok(Cursor {
            src: text.as_bytes(),
            pos: 0,
        })
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    pub(crate) fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let v = self.uint()?;
        let v = i64::try_from(v).map_err(|_| Error::parse(start, "integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    pub(crate) fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            return Err(Error::parse(start, "expected identifier"));
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }

    /// Consumes `name` if it appears next as a whole identifier.
    pub(crate) fn eat_ident(&mut self, name: &str) -> bool {
        let save = self.pos;
        match self.ident() {
            Ok(id) if id == name => true,
            _ => {
                self.pos = save;
                false
            }
        }
    }

    fn spec(&mut self) -> Result<RingSpec> {
        let mut factors = vec![self.factor()?];
        // A bare `x` between factors is the product sign.
        while self.eat(b'x') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            RingSpec::product(factors)
        })
    }

    fn factor(&mut self) -> Result<RingSpec> {
        let mut spec = self.atom()?;
        while self.eat(b'[') {
            let var = self.ident()?;
            self.expect(b']')?;
            self.expect(b'/')?;
            self.expect(b'(')?;
            let coeffs = self.poly(&var)?;
            self.expect(b')')?;
            spec = RingSpec::poly(spec, &var, &coeffs);
        }
        Ok(spec)
    }

    fn atom(&mut self) -> Result<RingSpec> {
        self.skip_ws();
        let start = self.pos;
        if self.eat(b'(') {
            let inner = self.spec()?;
            self.expect(b')')?;
            return Ok(inner);
        }
        if self.eat_keyword("GF") {
            self.expect(b'(')?;
            let p = self.uint()?;
            if self.eat(b'^') {
                let k = self.uint()?;
                self.expect(b')')?;
                let k =
                    u32::try_from(k).map_err(|_| Error::parse(start, "exponent out of range"))?;
                return RingSpec::gf(p, k);
            }
            self.expect(b')')?;
            return RingSpec::gf_order(p);
        }
        if self.eat_keyword("SC") {
            self.expect(b'(')?;
            let modulus = self.uint()?;
            self.expect(b';')?;
            let dim_pos = self.pos;
            let dim = usize::try_from(self.uint()?)
                .map_err(|_| Error::parse(dim_pos, "dimension out of range"))?;
            self.expect(b';')?;
            let table = self.int_list()?;
            self.expect(b';')?;
            let unit = self.int_list()?;
            self.expect(b')')?;
            return Ok(RingSpec::structure_constants(modulus, dim, table, unit));
        }
        if self.eat(b'Z') {
            self.expect(b'/')?;
            return Ok(RingSpec::Zmod(self.uint()?));
        }
        Err(Error::parse(
            start,
            "expected ring: Z/n, GF(q), SC(...) or '('",
        ))
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        let mut v = vec![self.int()?];
        while self.eat(b',') {
            v.push(self.int()?);
        }
        Ok(v)
    }

    /// Integer-coefficient polynomial in `var`; returns coefficients constant term first.
    fn poly(&mut self, var: &str) -> Result<Vec<i64>> {
        let mut coeffs: Vec<i64> = Vec::new();
        let mut first = true;
        loop {
            let sign = if self.eat(b'-') {
                -1
            } else if first || self.eat(b'+') {
                1
            } else {
                break;
            };
            first = false;
            let (c, d) = self.poly_term(var)?;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] = coeffs[d]
                .checked_add(sign * c)
                .ok_or_else(|| Error::parse(self.pos, "coefficient overflow"))?;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(coeffs)
    }

    fn poly_term(&mut self, var: &str) -> Result<(i64, usize)> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.uint()? as i64;
            if !self.eat(b'*') && !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                return Ok((c, 0));
            }
            c
        } else {
            1
        };
        let pos = self.pos;
        if !self.eat_ident(var) {
            return Err(Error::parse(pos, format!("expected variable '{var}'")));
        }
        let deg = if self.eat(b'^') {
            self.uint()? as usize
        } else {
            1
        };
        Ok((coeff, deg))
    }
}
