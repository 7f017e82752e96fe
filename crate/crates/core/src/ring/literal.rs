//! Element literals: integers (`n` reads as `n * 1` in any ring),
//! polynomials `a0+a1*x+...` with parenthesized non-integer coefficients,
//! structure-constant combinations `c*b1`, and tuples `(e1,e2)` for products.

use super::spec::Cursor;
use super::{digits, undigits, Elem, Repr, Ring};
use crate::error::{Error, Result};

impl Ring {
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        let mut cur = Cursor::new(text)?;
        let e = self.parse_elem_at(&mut cur)?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(Error::parse(cur.pos, "unexpected trailing input"));
        }
        Ok(e)
    }

    pub(crate) fn parse_elem_at(&self, cur: &mut Cursor<'_>) -> Result<Elem> {
        match &self.0.repr {
            Repr::Product(fs) if cur.peek() == Some(b'(') => {
                cur.expect(b'(')?;
                let mut parts = Vec::with_capacity(fs.len());
                for (i, f) in fs.iter().enumerate() {
                    if i > 0 {
                        cur.expect(b',')?;
                    }
                    parts.push(f.parse_elem_at(cur)?);
                }
                cur.expect(b')')?;
                Ok(Elem(Ring::join_product(fs, parts.into_iter())))
            }
            Repr::Corner { parent, index, .. } => {
                let pos = cur.pos;
                let e = parent.parse_elem_at(cur)?;
                match index[e.index()] {
                    u32::MAX => Err(Error::parse(pos, "element is not in this factor ring")),
                    i => Ok(Elem(i)),
                }
            }
            _ => self.parse_sum(cur),
        }
    }

    fn parse_sum(&self, cur: &mut Cursor<'_>) -> Result<Elem> {
        let mut acc = self.zero();
        let mut first = true;
        loop {
            let negate = if cur.eat(b'-') {
                true
            } else if first || cur.eat(b'+') {
                false
            } else {
                break;
            };
            first = false;
            let t = self.parse_term(cur)?;
            acc = if negate {
                self.sub(acc, t)
            } else {
                self.add(acc, t)
            };
        }
        Ok(acc)
    }

    fn parse_term(&self, cur: &mut Cursor<'_>) -> Result<Elem> {
        let pos = cur.pos;
        // Coefficient part: integer, or a parenthesized base element for quotients.
        let coeff: Option<Elem> = match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = cur.uint()?;
                let n = i64::try_from(n).map_err(|_| Error::parse(pos, "integer out of range"))?;
                Some(self.coeff_from_int(n))
            }
            Some(b'(') => match &self.0.repr {
                Repr::Poly { base, .. } => {
                    let e = if matches!(base.0.repr, Repr::Product(_)) {
                        base.parse_elem_at(cur)?
                    } else {
                        cur.expect(b'(')?;
                        let e = base.parse_elem_at(cur)?;
                        cur.expect(b')')?;
                        e
                    };
                    Some(e)
                }
                Repr::Product(_) => return self.parse_elem_at(cur),
                _ => {
                    cur.expect(b'(')?;
                    let e = self.parse_elem_at(cur)?;
                    cur.expect(b')')?;
                    return Ok(e);
                }
            },
            _ => None,
        };
        let has_mono = match coeff {
            Some(_) => cur.eat(b'*') || cur.peek().is_some_and(|c| c.is_ascii_alphabetic()),
            None => true,
        };
        match (&self.0.repr, has_mono) {
            (_, false) => Ok(self.constant(coeff.unwrap())),
            (Repr::Poly { base, var, modulus }, true) => {
                let mpos = cur.pos;
                if !cur.eat_ident(var) {
                    return Err(Error::parse(mpos, format!("expected variable '{var}'")));
                }
                let deg = if cur.eat(b'^') {
                    cur.uint()? as usize
                } else {
                    1
                };
                let c = coeff.unwrap_or_else(|| base.one());
                Ok(self.poly_monomial(base, modulus.len() - 1, c, deg))
            }
            (Repr::Sc { n, dim, .. }, true) => {
                let mpos = cur.pos;
                let id = cur.ident()?;
                let k = id
                    .strip_prefix('b')
                    .and_then(|s| s.parse::<usize>().ok())
                    .filter(|k| k < dim)
                    .ok_or_else(|| {
                        Error::parse(mpos, format!("expected basis element b0..b{}", dim - 1))
                    })?;
                let c = coeff.map_or(1, |e| e.0);
                let mut v = vec![0u32; *dim];
                v[k] = c % n;
                Ok(Elem(undigits(v.into_iter(), *n as usize) as u32))
            }
            _ => Err(Error::parse(pos, "unexpected symbol in element literal")),
        }
    }

    /// Integers become base-ring scalars inside quotients, ring scalars elsewhere;
    /// for structure-constant rings they are raw coordinates mod n.
    fn coeff_from_int(&self, n: i64) -> Elem {
        match &self.0.repr {
            Repr::Poly { base, .. } => base.from_int(n),
            Repr::Sc { n: m, .. } => Elem(n.rem_euclid(*m as i64) as u32),
            _ => self.from_int(n),
        }
    }

    /// A coefficient standing alone.
    fn constant(&self, c: Elem) -> Elem {
        match &self.0.repr {
            Repr::Poly { base, modulus, .. } => self.poly_monomial(base, modulus.len() - 1, c, 0),
            Repr::Sc { .. } => self.from_int(c.0 as i64),
            _ => c,
        }
    }

    fn poly_monomial(&self, base: &Ring, d: usize, c: Elem, deg: usize) -> Elem {
        // x^deg reduced by repeated multiplication by x
        let mut v = vec![0u32; d];
        v[0] = c.0;
        let mut e = Elem(undigits(v.into_iter(), base.size()) as u32);
        if deg > 0 {
            let x = if d == 1 {
                // x equals minus the constant term of the monic linear modulus
                let Repr::Poly { modulus, .. } = &self.0.repr else {
                    unreachable!()
                };
                Elem(base.neg(modulus[0]).0)
            } else {
                let mut v = vec![0u32; d];
                v[1] = base.one().0;
                Elem(undigits(v.into_iter(), base.size()) as u32)
            };
            for _ in 0..deg {
                e = self.mul(e, x);
            }
        }
        e
    }

    /// Canonical literal; `parse_elem` inverts it.
    pub fn fmt_elem(&self, e: Elem) -> String {
        match &self.0.repr {
            Repr::Zmod(_) => e.0.to_string(),
            Repr::Poly { base, var, modulus } => {
                let d = modulus.len() - 1;
                let mut terms = Vec::new();
                for (deg, c) in digits(e.index(), base.size(), d).into_iter().enumerate() {
                    let c = Elem(c);
                    if c == Elem::ZERO {
                        continue;
                    }
                    let coeff = if matches!(base.0.repr, Repr::Zmod(_)) {
                        c.0.to_string()
                    } else if c == base.one() {
                        "1".to_string()
                    } else if matches!(base.0.repr, Repr::Product(_)) {
                        base.fmt_elem(c)
                    } else {
                        format!("({})", base.fmt_elem(c))
                    };
                    let mono = match deg {
                        0 => String::new(),
                        1 => var.clone(),
                        k => format!("{var}^{k}"),
                    };
                    terms.push(match (deg, coeff.as_str()) {
                        (0, _) => coeff,
                        (_, "1") => mono,
                        _ => format!("{coeff}*{mono}"),
                    });
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            Repr::Sc { n, dim, .. } => {
                let terms: Vec<String> = digits(e.index(), *n as usize, *dim)
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .map(|(k, c)| {
                        if c == 1 {
                            format!("b{k}")
                        } else {
                            format!("{c}*b{k}")
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            Repr::Product(fs) => {
                let parts: Vec<String> = Ring::split_product(fs, e.0)
                    .into_iter()
                    .zip(fs)
                    .map(|(p, f)| f.fmt_elem(p))
                    .collect();
                format!("({})", parts.join(","))
            }
            Repr::Corner {
                parent, members, ..
            } => parent.fmt_elem(members[e.index()]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    #[test]
    fn literals_roundtrip_everywhere() {
        for s in [
            "Z/12",
            "GF(2)[x]/(x^3)",
            "Z/4 x Z/3",
            "GF(9)",
            "(Z/2 x Z/3)[y]/(y^2)",
            "Z/3[x]/(x+1)",
        ] {
            let r = Ring::parse(s).unwrap();
            for e in r.elements() {
                let lit = r.fmt_elem(e);
                assert_eq!(r.parse_elem(&lit).unwrap(), e, "{s}: {lit}");
            }
        }
        let r = Ring::from_spec(&RingSpec::gf2_square_zero_plane()).unwrap();
        for e in r.elements() {
            assert_eq!(r.parse_elem(&r.fmt_elem(e)).unwrap(), e);
        }
    }

    #[test]
    fn integer_literals_are_multiples_of_one() {
        let r = Ring::parse("Z/4 x Z/3").unwrap();
        assert_eq!(r.fmt_elem(r.parse_elem("2").unwrap()), "(2,2)");
        assert_eq!(r.fmt_elem(r.parse_elem("-1").unwrap()), "(3,2)");
        let r = Ring::parse("Z/8").unwrap();
        assert_eq!(r.parse_elem("-3").unwrap(), Elem(5));
        assert_eq!(r.parse_elem("3+7").unwrap(), Elem(2));
        let r = Ring::from_spec(&RingSpec::gf2_square_zero_plane()).unwrap();
        assert_eq!(r.parse_elem("1").unwrap(), r.one());
        assert_eq!(r.fmt_elem(r.one()), "b0");
        assert_eq!(
            r.parse_elem("b1 + b2").unwrap(),
            r.add(r.parse_elem("b1").unwrap(), r.parse_elem("b2").unwrap())
        );
    }

    #[test]
    fn polynomial_literals() {
        let r = Ring::parse("Z/4[x]/(x^2+1)").unwrap();
        let x = r.parse_elem("x").unwrap();
        assert_eq!(r.mul(x, x), r.from_int(-1));
        assert_eq!(r.parse_elem("x^2").unwrap(), r.from_int(3));
        assert_eq!(r.fmt_elem(r.parse_elem("1+2*x").unwrap()), "1+2*x");
        assert_eq!(r.parse_elem("2x").unwrap(), r.parse_elem("2*x").unwrap());
        assert!(matches!(r.parse_elem("y"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse_elem("1+"), Err(Error::Parse { .. })));
    }
}
