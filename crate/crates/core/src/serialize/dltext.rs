//! Line-based DL text: `Cat <= Animal`, `Advocate == Lawyer`,
//! `John : Student`, `hasHeight(John, H_John)`, `hasValue(ft_John, 5)`,
//! `John = Joe`. A trailing `# <index> <rule>` records provenance.

use std::fmt::Write as _;

use super::ParseError;
use crate::dlmodel::{Axiom, ConceptExpr, Literal, Ontology, Provenance};

pub fn expr_to_dl(e: &ConceptExpr) -> String {
    match e {
        ConceptExpr::Top => "top".into(),
        ConceptExpr::Bottom => "bottom".into(),
        ConceptExpr::Atom(n) => n.clone(),
        ConceptExpr::Nominal(a) => format!("{{{a}}}"),
        ConceptExpr::DataNominal(l) => format!("{{{}}}", literal(l)),
        ConceptExpr::DataAll(r, dt) => format!("all {r} . {dt}"),
        ConceptExpr::Not(x) => format!("not {}", operand(x)),
        ConceptExpr::AllValues(r, x) => format!("all {r} . {}", operand(x)),
        ConceptExpr::And(ms) => ms.iter().map(operand).collect::<Vec<_>>().join(" and "),
        ConceptExpr::Or(ms) => ms.iter().map(operand).collect::<Vec<_>>().join(" or "),
    }
}

fn operand(e: &ConceptExpr) -> String {
    match e {
        ConceptExpr::And(_) | ConceptExpr::Or(_) => format!("({})", expr_to_dl(e)),
        _ => expr_to_dl(e),
    }
}

fn literal(l: &Literal) -> String {
    match l {
        Literal::Int(i) => i.to_string(),
        Literal::Symbol(s) => format!("\"{s}\""),
    }
}

pub fn axiom_to_dl(a: &Axiom) -> String {
    match a {
        Axiom::SubClassOf(x, y) => format!("{} <= {}", expr_to_dl(x), expr_to_dl(y)),
        Axiom::EquivalentTo(x, y) => format!("{} == {}", expr_to_dl(x), expr_to_dl(y)),
        Axiom::ConceptAssertion(c, i) => format!("{i} : {}", expr_to_dl(c)),
        Axiom::RoleAssertion(r, x, y) => format!("{r}({x}, {y})"),
        Axiom::DataAssertion(r, x, l) => format!("{r}({x}, {})", literal(l)),
        Axiom::SameIndividual(x, y) => format!("{x} = {y}"),
    }
}

/// One axiom per line, with provenance trailers where known.
pub fn to_dl_text(onto: &Ontology) -> String {
    let mut out = String::new();
    for (a, p) in onto.entries() {
        out.push_str(&axiom_to_dl(a));
        if let Some(p) = p {
            let _ = write!(out, "  # {} {}", p.source_index, p.rule_id);
        }
        out.push('\n');
    }
    out
}

pub fn parse_dl_text(text: &str) -> Result<Ontology, ParseError> {
    let mut onto = Ontology::new();
    for (i, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if body.trim().is_empty() {
            continue;
        }
        let axiom = parse_axiom_at(body, i + 1)?;
        let prov = comment.and_then(|c| {
            let mut it = c.split_whitespace();
            let idx = it.next()?.parse().ok()?;
            let rule = it.next()?;
            Some(Provenance::new(idx, rule))
        });
        onto.add_axiom(axiom, prov);
    }
    Ok(onto)
}

/// A `## <index> <title>` section of a block-structured DL text file.
#[derive(Debug, Clone, PartialEq)]
pub struct DlBlock {
    pub index: usize,
    pub title: String,
    pub axioms: Vec<Axiom>,
}

/// Splits a file into `## N title` sections; `#` lines outside a header
/// are comments. Axioms before the first header are an error.
pub fn parse_dl_blocks(text: &str) -> Result<Vec<DlBlock>, ParseError> {
    let mut blocks: Vec<DlBlock> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("##") {
            let rest = rest.trim();
            let (num, title) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let index = num.parse().map_err(|_| ParseError::new(i + 1, 3, format!("bad block index {num:?}")))?;
            blocks.push(DlBlock { index, title: title.trim().to_string(), axioms: Vec::new() });
            continue;
        }
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let axiom = parse_axiom_at(body, i + 1)?;
        match blocks.last_mut() {
            Some(b) => b.axioms.push(axiom),
            None => return Err(ParseError::new(i + 1, 1, "axiom outside a ## block")),
        }
    }
    Ok(blocks)
}

pub fn parse_axiom(line: &str) -> Result<Axiom, ParseError> {
    parse_axiom_at(line, 1)
}

pub fn parse_expr(text: &str) -> Result<ConceptExpr, ParseError> {
    let toks = lex(text, 1)?;
    let mut p = Parser { toks, pos: 0, line: 1 };
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Dot,
    Colon,
    Sub,
    Equiv,
    Same,
}

fn lex(s: &str, line: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c == '<' && chars.get(i + 1) == Some(&'=') {
            out.push((Tok::Sub, col));
            i += 2;
        } else if c == '=' {
            if chars.get(i + 1) == Some(&'=') {
                out.push((Tok::Equiv, col));
                i += 2;
            } else {
                out.push((Tok::Same, col));
                i += 1;
            }
        } else if c == '"' {
            let start = i + 1;
            let end = chars[start..].iter().position(|&c| c == '"').map(|p| start + p).ok_or(ParseError::new(line, col, "unterminated string"))?;
            out.push((Tok::Str(chars[start..end].iter().collect()), col));
            i = end + 1;
        } else if c.is_alphanumeric() || c == '_' || c == '-' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '-') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError::new(line, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {t:?}")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(format!("unexpected {t:?}"))),
        }
    }

    fn keyword(&self, k: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == k)
    }

    fn expr(&mut self) -> Result<ConceptExpr, ParseError> {
        let mut ors = vec![self.conj()?];
        while self.keyword("or") {
            self.pos += 1;
            ors.push(self.conj()?);
        }
        Ok(if ors.len() == 1 { ors.pop().unwrap() } else { ConceptExpr::Or(ors) })
    }

    fn conj(&mut self) -> Result<ConceptExpr, ParseError> {
        let mut ands = vec![self.unary()?];
        while self.keyword("and") {
            self.pos += 1;
            ands.push(self.unary()?);
        }
        Ok(if ands.len() == 1 { ands.pop().unwrap() } else { ConceptExpr::And(ands) })
    }

    fn unary(&mut self) -> Result<ConceptExpr, ParseError> {
        match self.next() {
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::LBrace) => {
                let e = match self.next() {
                    Some(Tok::Str(s)) => ConceptExpr::DataNominal(Literal::Symbol(s)),
                    Some(Tok::Ident(s)) => match s.parse::<i64>() {
                        Ok(i) => ConceptExpr::DataNominal(Literal::Int(i)),
                        Err(_) => ConceptExpr::Nominal(s),
                    },
                    _ => {
                        self.pos -= 1;
                        return Err(self.err("expected an individual or literal"));
                    }
                };
                self.expect(Tok::RBrace)?;
                Ok(e)
            }
            Some(Tok::Ident(s)) => match s.as_str() {
                "top" => Ok(ConceptExpr::Top),
                "bottom" => Ok(ConceptExpr::Bottom),
                "not" => Ok(ConceptExpr::Not(Box::new(self.unary()?))),
                "all" => {
                    let r = self.ident()?;
                    self.expect(Tok::Dot)?;
                    if matches!(self.peek(), Some(Tok::Ident(s)) if s == "xsd") && self.toks.get(self.pos + 1).map(|t| &t.0) == Some(&Tok::Colon) {
                        self.pos += 2;
                        let dt = self.ident()?;
                        return Ok(ConceptExpr::DataAll(r, format!("xsd:{dt}")));
                    }
                    Ok(ConceptExpr::AllValues(r, Box::new(self.unary()?)))
                }
                "and" | "or" => {
                    self.pos -= 1;
                    Err(self.err(format!("unexpected '{s}'")))
                }
                _ => Ok(ConceptExpr::Atom(s)),
            },
            Some(t) => {
                self.pos -= 1;
                Err(self.err(format!("unexpected {t:?}")))
            }
            None => Err(self.err("unexpected end of line")),
        }
    }

    fn axiom(&mut self) -> Result<Axiom, ParseError> {
        let head = (self.toks.first().map(|t| &t.0), self.toks.get(1).map(|t| &t.0));
        match head {
            (Some(Tok::Ident(_)), Some(Tok::LParen)) => {
                let r = self.ident()?;
                self.expect(Tok::LParen)?;
                let a = self.ident()?;
                self.expect(Tok::Comma)?;
                let ax = match self.next() {
                    Some(Tok::Str(s)) => Axiom::DataAssertion(r, a, Literal::Symbol(s)),
                    Some(Tok::Ident(b)) => match b.parse::<i64>() {
                        Ok(i) => Axiom::DataAssertion(r, a, Literal::Int(i)),
                        Err(_) => Axiom::RoleAssertion(r, a, b),
                    },
                    _ => {
                        self.pos -= 1;
                        return Err(self.err("expected an individual or literal"));
                    }
                };
                self.expect(Tok::RParen)?;
                Ok(ax)
            }
            (Some(Tok::Ident(_)), Some(Tok::Colon)) => {
                let i = self.ident()?;
                self.expect(Tok::Colon)?;
                Ok(Axiom::ConceptAssertion(self.expr()?, i))
            }
            (Some(Tok::Ident(_)), Some(Tok::Same)) => {
                let a = self.ident()?;
                self.expect(Tok::Same)?;
                Ok(Axiom::SameIndividual(a, self.ident()?))
            }
            _ => {
                let lhs = self.expr()?;
                match self.next() {
                    Some(Tok::Sub) => Ok(Axiom::SubClassOf(lhs, self.expr()?)),
                    Some(Tok::Equiv) => Ok(Axiom::EquivalentTo(lhs, self.expr()?)),
                    _ => {
                        self.pos -= 1;
                        Err(self.err("expected '<=' or '=='"))
                    }
                }
            }
        }
    }
}

fn parse_axiom_at(line: &str, n: usize) -> Result<Axiom, ParseError> {
    let toks = lex(line, n)?;
    let mut p = Parser { toks, pos: 0, line: n };
    let a = p.axiom()?;
    p.end()?;
    Ok(a.canonical())
}
