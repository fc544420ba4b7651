//! The printed generators of the E₂ cells and the relation list of Table 14.
//!
//! Relations are written over named elements with `+`, `*`, `^` and
//! parentheses. A name is looked up among the generators, then among the
//! stored projections `phiK`, and last as an E₁ generator.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{parse_gen, parse_poly, AlgebraError, Poly};
use crate::projection::{Database, Origin};

pub const GENERATORS_FILE: &str = "generators.txt";
pub const RELATIONS_FILE: &str = "table14.txt";

const GENERATORS_TEXT: &str = include_str!("../data/generators.txt");
const RELATIONS_TEXT: &str = include_str!("../data/table14.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("{origin}: {msg}")]
    Parse { origin: Origin, msg: String },
    #[error("{origin}: {name} has t = {got}, printed {printed}")]
    Degree {
        origin: Origin,
        name: String,
        got: u32,
        printed: u32,
    },
}

/// One named generator, with the table it is printed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub table: u32,
    pub name: String,
    pub t: u32,
    pub value: Poly,
    pub origin: Origin,
}

#[derive(Debug, Clone, Default)]
pub struct Generators {
    list: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl Generators {
    pub fn builtin() -> Self {
        Self::parse(GENERATORS_FILE, GENERATORS_TEXT).expect("builtin generators parse")
    }

    pub fn parse(file: &str, text: &str) -> Result<Self, TableError> {
        let mut out = Generators::default();
        for (n, raw) in text.lines().enumerate() {
            let origin = Origin {
                file: file.to_string(),
                line: n + 1,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| TableError::Parse {
                origin: origin.clone(),
                msg,
            };
            let (head, body) = line
                .split_once('=')
                .ok_or_else(|| err("expected `GEN table name t = poly`".into()))?;
            let head: Vec<&str> = head.split_whitespace().collect();
            let [kw, table, name, t] = head[..] else {
                return Err(err("expected `GEN table name t = poly`".into()));
            };
            if kw != "GEN" {
                return Err(err(format!("unknown keyword {kw}")));
            }
            let num = |s: &str| s.parse::<u32>().map_err(|e| err(format!("{s}: {e}")));
            let (table, t) = (num(table)?, num(t)?);
            let value = parse_poly(body).map_err(|e| err(e.to_string()))?;
            if let Some(d) = value.degree() {
                if d.t != t {
                    return Err(TableError::Degree {
                        origin,
                        name: name.into(),
                        got: d.t,
                        printed: t,
                    });
                }
            }
            if out.index.contains_key(name) {
                return Err(err(format!("duplicate generator {name}")));
            }
            out.index.insert(name.to_string(), out.list.len());
            out.list.push(Generator {
                table,
                name: name.to_string(),
                t,
                value,
                origin,
            });
        }
        Ok(out)
    }

    pub fn get(&self, name: &str) -> Option<&Generator> {
        self.index.get(name).map(|&i| &self.list[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.list.iter()
    }

    pub fn of_table(&self, table: u32) -> impl Iterator<Item = &Generator> {
        self.list.iter().filter(move |g| g.table == table)
    }
}

/// A chain `e₀ = e₁ = …` as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub sides: Vec<String>,
    pub origin: Origin,
}

impl Relation {
    pub fn text(&self) -> String {
        self.sides.join(" = ")
    }
}

pub fn builtin_relations() -> Vec<Relation> {
    parse_relations(RELATIONS_FILE, RELATIONS_TEXT).expect("builtin relations parse")
}

pub fn parse_relations(file: &str, text: &str) -> Result<Vec<Relation>, TableError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let origin = Origin {
            file: file.to_string(),
            line: n + 1,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(body) = line.strip_prefix("REL ") else {
            return Err(TableError::Parse {
                origin,
                msg: "expected `REL lhs = rhs`".into(),
            });
        };
        let sides: Vec<String> = body.split('=').map(|s| s.trim().to_string()).collect();
        if sides.len() < 2 || sides.iter().any(|s| s.is_empty()) {
            return Err(TableError::Parse {
                origin,
                msg: "a relation needs at least two nonempty sides".into(),
            });
        }
        out.push(Relation { sides, origin });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected {found:?} at offset {at}")]
    Syntax { at: usize, found: String },
    #[error("unknown name {0}")]
    Unknown(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Name lookup for [`eval_expr`].
pub struct Scope<'a> {
    pub generators: &'a Generators,
    pub db: Option<&'a Database>,
}

impl Scope<'_> {
    fn lookup(&self, name: &str) -> Result<Poly, ExprError> {
        if let Some(g) = self.generators.get(name) {
            return Ok(g.value.clone());
        }
        if let Some(m) = name.strip_prefix("phi").and_then(|k| k.parse::<u32>().ok()) {
            if let Some(p) = self.db.and_then(|db| db.projection(m)) {
                return Ok(p.clone());
            }
        }
        parse_gen(name)
            .map(Poly::gen)
            .map_err(|_| ExprError::Unknown(name.to_string()))
    }
}

struct Parser<'a, 's> {
    src: &'a [u8],
    pos: usize,
    scope: &'a Scope<'s>,
}

impl Parser<'_, '_> {
    fn skip(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self) -> Result<T, ExprError> {
        let found = self
            .src
            .get(self.pos..)
            .map(|s| String::from_utf8_lossy(s).chars().take(8).collect())
            .unwrap_or_default();
        Err(ExprError::Syntax {
            at: self.pos,
            found,
        })
    }

    fn number(&mut self) -> Result<u32, ExprError> {
        self.skip();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.fail(), Ok)
    }

    fn expr(&mut self) -> Result<Poly, ExprError> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            acc += self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ExprError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.number()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.fail();
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b) if b.is_ascii_digit() => match self.number()? {
                0 => Ok(Poly::zero()),
                1 => Ok(Poly::one()),
                _ => self.fail(),
            },
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                // c{2,3} and similar alias forms
                if self.src.get(self.pos) == Some(&b'{') {
                    match self.src[self.pos..].iter().position(|&b| b == b'}') {
                        Some(end) => self.pos += end + 1,
                        None => return self.fail(),
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.scope.lookup(name)
            }
            _ => self.fail(),
        }
    }
}

/// Evaluates an expression over named elements to its E₁ expansion.
pub fn eval_expr(text: &str, scope: &Scope<'_>) -> Result<Poly, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        scope,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.fail();
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tables_parse() {
        let g = Generators::builtin();
        assert_eq!(g.of_table(11).count(), 28);
        assert_eq!(g.of_table(13).count(), 19);
        assert_eq!(g.get("omega1").unwrap().t, 50);
        assert!(builtin_relations().len() > 40);
    }

    #[test]
    fn expressions() {
        let g = Generators::builtin();
        let db = Database::builtin();
        let scope = Scope {
            generators: &g,
            db: Some(&db),
        };
        let v = eval_expr("u1*(h0*c2 + h1*h2)", &scope).unwrap();
        assert_eq!(v, parse_poly("u1*h0*c2 + u1*h1*h2").unwrap());
        assert_eq!(eval_expr("a2", &scope).unwrap(), parse_poly("h0*c2 + h1*h2").unwrap());
        assert_eq!(eval_expr("phi3", &scope).unwrap(), db.projection(3).unwrap().clone());
        assert_eq!(eval_expr("(u1 + u2)^2", &scope).unwrap(), parse_poly("u1^2 + u2^2").unwrap());
        assert!(matches!(eval_expr("zz9", &scope), Err(ExprError::Unknown(_))));
        assert!(eval_expr("u1 +", &scope).is_err());
    }
}
