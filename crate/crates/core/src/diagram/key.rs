use super::{DiagramTree, SingularityDiagram};
use crate::arith::rational::Rational;
use crate::Error;
use num_bigint::BigInt;
use num_traits::Zero;

/// Parses a canonical key. Child order in the input is free; the result is
/// canonical, and its multiplicity must match the `m` prefix.
pub fn parse_key(s: &str) -> Result<SingularityDiagram, Error> {
    let mut p = KeyParser { s: s.as_bytes(), pos: 0 };
    p.expect(b'm')?;
    let m = p.int()?;
    let tree = p.tree()?;
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    let d = SingularityDiagram::new(tree).map_err(|e| Error::Parse { position: 0, message: e.to_string() })?;
    if BigInt::from(d.multiplicity) != m {
        return Err(Error::Parse {
            position: 1,
            message: format!("multiplicity {m} does not match the tree ({})", d.multiplicity),
        });
    }
    Ok(d)
}

struct KeyParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl KeyParser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { position: self.pos, message: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn rat(&mut self) -> Result<Rational, Error> {
        let n = self.int()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.int()?;
            if d.is_zero() {
                return Err(Error::Parse { position: at, message: "zero denominator".into() });
            }
            Ok(Rational::new(n, d))
        } else {
            Ok(Rational::from_integer(n))
        }
    }

    fn tree(&mut self) -> Result<DiagramTree, Error> {
        match self.peek() {
            Some(b'S') => {
                self.pos += 1;
                Ok(DiagramTree::smooth())
            }
            Some(b'[') => {
                self.pos += 1;
                let mut exps = vec![self.rat()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    exps.push(self.rat()?);
                }
                self.expect(b']')?;
                Ok(DiagramTree::leaf(exps))
            }
            Some(b'(') => {
                self.pos += 1;
                let contact = self.rat()?;
                self.expect(b':')?;
                let mut children = vec![self.tree()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    children.push(self.tree()?);
                }
                self.expect(b')')?;
                Ok(DiagramTree::Node { contact, children })
            }
            _ => Err(self.err("expected 'S', '[' or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for k in ["m2(1:S,S)", "m2[3/2]", "m2(2:S,S)", "m3(3/2:S,[3/2])", "m5(1:S,(2:S,S),[3/2])", "m6[7/6]", "m4[3/2,7/4]"] {
            assert_eq!(parse_key(k).unwrap().canonical_key(), k);
        }
    }

    #[test]
    fn reorders_children() {
        assert_eq!(parse_key("m3(1:(2:S,S),S)").unwrap().canonical_key(), "m3(1:S,(2:S,S))");
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_key("m2(1:S,S"), Err(Error::Parse { position: 8, .. })));
        assert!(matches!(parse_key("m3(1:S,S)"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse_key("m2(1:S,X)"), Err(Error::Parse { position: 7, .. })));
        assert!(parse_key("m2(1:S,S)x").is_err());
        assert!(parse_key("m2(2:S,(1:S,S))").is_err());
    }
}
