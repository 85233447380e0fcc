//! OWL 2 functional-syntax writer and a reader for the same subset.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::ParseError;
use crate::dlmodel::{builtin_role, Axiom, ConceptExpr, Literal, Ontology};

pub const DEFAULT_NAMESPACE: &str = "https://example.org/isaonto#";

const RANK_NOTE: &str = "string-typed hasValue literals are open-world rank markers: n is the instance count, n-m the m-th from the bottom";

fn lit(l: &Literal) -> String {
    match l {
        Literal::Int(i) => format!("\"{i}\"^^xsd:integer"),
        Literal::Symbol(s) => format!("\"{s}\"^^xsd:string"),
    }
}

fn class_expr(e: &ConceptExpr) -> String {
    let list = |ms: &[ConceptExpr]| ms.iter().map(class_expr).collect::<Vec<_>>().join(" ");
    match e {
        ConceptExpr::Top => "owl:Thing".into(),
        ConceptExpr::Bottom => "owl:Nothing".into(),
        ConceptExpr::Atom(n) => format!(":{n}"),
        ConceptExpr::Nominal(a) => format!("ObjectOneOf(:{a})"),
        ConceptExpr::DataNominal(l) => format!("DataOneOf({})", lit(l)),
        ConceptExpr::DataAll(r, dt) => format!("DataAllValuesFrom(:{r} {dt})"),
        ConceptExpr::Not(x) => format!("ObjectComplementOf({})", class_expr(x)),
        ConceptExpr::AllValues(r, x) => match x.as_ref() {
            ConceptExpr::DataNominal(l) => format!("DataHasValue(:{r} {})", lit(l)),
            _ => format!("ObjectAllValuesFrom(:{r} {})", class_expr(x)),
        },
        ConceptExpr::And(ms) => format!("ObjectIntersectionOf({})", list(ms)),
        ConceptExpr::Or(ms) => format!("ObjectUnionOf({})", list(ms)),
    }
}

fn axiom(a: &Axiom) -> String {
    match a {
        Axiom::SubClassOf(x, y) => format!("SubClassOf({} {})", class_expr(x), class_expr(y)),
        Axiom::EquivalentTo(x, y) => format!("EquivalentClasses({} {})", class_expr(x), class_expr(y)),
        Axiom::ConceptAssertion(c, i) => format!("ClassAssertion({} :{i})", class_expr(c)),
        Axiom::RoleAssertion(r, x, y) => format!("ObjectPropertyAssertion(:{r} :{x} :{y})"),
        Axiom::DataAssertion(r, x, l) => format!("DataPropertyAssertion(:{r} :{x} {})", lit(l)),
        Axiom::SameIndividual(x, y) => format!("SameIndividual(:{x} :{y})"),
    }
}

/// Object and data property names, split by how they are used.
fn property_kinds(onto: &Ontology) -> (BTreeSet<String>, BTreeSet<String>) {
    let (mut object, mut data) = (BTreeSet::new(), BTreeSet::new());
    for a in onto.axioms() {
        for e in a.exprs() {
            e.walk(&mut |x| match x {
                ConceptExpr::AllValues(r, f) => {
                    if matches!(f.as_ref(), ConceptExpr::DataNominal(_)) {
                        data.insert(r.clone());
                    } else {
                        object.insert(r.clone());
                    }
                }
                ConceptExpr::DataAll(r, _) => {
                    data.insert(r.clone());
                }
                _ => {}
            });
        }
        match a {
            Axiom::RoleAssertion(r, ..) => {
                object.insert(r.clone());
            }
            Axiom::DataAssertion(r, ..) => {
                data.insert(r.clone());
            }
            _ => {}
        }
    }
    (object, data)
}

pub fn to_owl_functional(onto: &Ontology) -> String {
    to_owl_functional_in(onto, DEFAULT_NAMESPACE)
}

/// Prefix block, sorted declarations, property characteristics, then the
/// axioms in insertion order.
pub fn to_owl_functional_in(onto: &Ontology, namespace: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Prefix(:=<{namespace}>)");
    out.push_str("Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n");
    out.push_str("Prefix(rdf:=<http://www.w3.org/1999/02/22-rdf-syntax-ns#>)\n");
    out.push_str("Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n");
    out.push_str("Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n\n");
    let base = namespace.trim_end_matches(['#', '/']);
    let _ = writeln!(out, "Ontology(<{base}>");
    let (mut object, data) = property_kinds(onto);
    let has_symbols = onto.axioms().any(|a| matches!(a, Axiom::DataAssertion(_, _, Literal::Symbol(_))))
        || onto.axioms().any(|a| a.exprs().iter().any(|e| {
            let mut found = false;
            e.walk(&mut |x| found |= matches!(x, ConceptExpr::DataNominal(Literal::Symbol(_))));
            found
        }));
    if has_symbols {
        let _ = writeln!(out, "Annotation(rdfs:comment \"{RANK_NOTE}\")");
    }
    let dim_roles: Vec<String> = object.iter().filter(|r| builtin_role(r).and_then(|b| b.parent).is_some()).cloned().collect();
    if !dim_roles.is_empty() {
        object.insert("hasDim".to_string());
    }
    for c in onto.concept_names() {
        let _ = writeln!(out, "Declaration(Class(:{c}))");
    }
    for r in &object {
        let _ = writeln!(out, "Declaration(ObjectProperty(:{r}))");
    }
    for r in &data {
        let _ = writeln!(out, "Declaration(DataProperty(:{r}))");
    }
    for i in onto.individuals() {
        let _ = writeln!(out, "Declaration(NamedIndividual(:{i}))");
    }
    if object.contains("include") {
        out.push_str("TransitiveObjectProperty(:include)\n");
    }
    for r in &dim_roles {
        let _ = writeln!(out, "SubObjectPropertyOf(:{r} :hasDim)");
    }
    for a in onto.axioms() {
        out.push_str(&axiom(a));
        out.push('\n');
    }
    out.push_str(")\n");
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Sx {
    Atom(String, usize, usize),
    List(String, Vec<Sx>, usize, usize),
}

impl Sx {
    fn pos(&self) -> (usize, usize) {
        match self {
            Sx::Atom(_, l, c) | Sx::List(_, _, l, c) => (*l, *c),
        }
    }
}

struct Reader<'a> {
    chars: Vec<char>,
    i: usize,
    line: usize,
    col: usize,
    _src: &'a str,
}

impl Reader<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, msg)
    }

    fn bump(&mut self) -> Option<char> {
        let c = *self.chars.get(self.i)?;
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.i) {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' && self.col == 1 {
                while self.chars.get(self.i).is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Result<Option<(String, usize, usize)>, ParseError> {
        self.skip_ws();
        let (l, c) = (self.line, self.col);
        let Some(&first) = self.chars.get(self.i) else { return Ok(None) };
        let mut s = String::new();
        if first == '(' || first == ')' {
            self.bump();
            return Ok(Some((first.to_string(), l, c)));
        }
        if first == '"' {
            s.push(self.bump().unwrap());
            loop {
                match self.bump() {
                    Some('"') => break,
                    Some('\\') => {
                        if let Some(n) = self.bump() {
                            s.push(n);
                        }
                    }
                    Some(ch) => s.push(ch),
                    None => return Err(self.err("unterminated literal")),
                }
            }
            s.push('"');
        }
        if first == '<' {
            while let Some(ch) = self.bump() {
                s.push(ch);
                if ch == '>' {
                    break;
                }
            }
        }
        while let Some(&ch) = self.chars.get(self.i) {
            if ch.is_whitespace() || ch == '(' || ch == ')' {
                break;
            }
            s.push(ch);
            self.bump();
        }
        Ok(Some((s, l, c)))
    }

    fn sexpr(&mut self, head: (String, usize, usize)) -> Result<Sx, ParseError> {
        self.skip_ws();
        if self.chars.get(self.i) != Some(&'(') {
            return Ok(Sx::Atom(head.0, head.1, head.2));
        }
        self.bump();
        let mut items = Vec::new();
        loop {
            match self.token()? {
                None => return Err(self.err("unbalanced parentheses")),
                Some((t, ..)) if t == ")" => break,
                Some((t, l, c)) if t == "(" => return Err(ParseError::new(l, c, "unexpected '('")),
                Some(tok) => items.push(self.sexpr(tok)?),
            }
        }
        Ok(Sx::List(head.0, items, head.1, head.2))
    }
}

fn name(sx: &Sx) -> Result<String, ParseError> {
    match sx {
        Sx::Atom(s, l, c) => {
            if let Some(rest) = s.strip_prefix(':') {
                Ok(rest.to_string())
            } else if s.starts_with('<') && s.ends_with('>') {
                let iri = &s[1..s.len() - 1];
                Ok(iri.rsplit(['#', '/']).next().unwrap_or(iri).to_string())
            } else {
                Err(ParseError::new(*l, *c, format!("expected a name, found '{s}'")))
            }
        }
        Sx::List(h, _, l, c) => Err(ParseError::new(*l, *c, format!("expected a name, found {h}(...)"))),
    }
}

fn literal(sx: &Sx) -> Result<Literal, ParseError> {
    let bad = |sx: &Sx| {
        let (l, c) = sx.pos();
        ParseError::new(l, c, "expected a literal")
    };
    let Sx::Atom(s, ..) = sx else { return Err(bad(sx)) };
    let Some(rest) = s.strip_prefix('"') else { return Err(bad(sx)) };
    let (value, dt) = match rest.split_once('"') {
        Some((v, tail)) => (v, tail.strip_prefix("^^").unwrap_or("")),
        None => return Err(bad(sx)),
    };
    if dt.ends_with("integer") {
        value.parse().map(Literal::Int).map_err(|_| bad(sx))
    } else {
        Ok(Literal::Symbol(value.to_string()))
    }
}

fn args(sx: &Sx, n: usize) -> Result<&[Sx], ParseError> {
    match sx {
        Sx::List(h, items, l, c) => {
            if n != usize::MAX && items.len() != n {
                return Err(ParseError::new(*l, *c, format!("{h} expects {n} arguments")));
            }
            Ok(items)
        }
        Sx::Atom(s, l, c) => Err(ParseError::new(*l, *c, format!("expected an expression, found '{s}'"))),
    }
}

fn concept(sx: &Sx) -> Result<ConceptExpr, ParseError> {
    match sx {
        Sx::Atom(s, ..) if s == "owl:Thing" => Ok(ConceptExpr::Top),
        Sx::Atom(s, ..) if s == "owl:Nothing" => Ok(ConceptExpr::Bottom),
        Sx::Atom(..) => Ok(ConceptExpr::Atom(name(sx)?)),
        Sx::List(h, items, l, c) => match h.as_str() {
            "ObjectIntersectionOf" => Ok(ConceptExpr::and(items.iter().map(concept).collect::<Result<_, _>>()?)),
            "ObjectUnionOf" => Ok(ConceptExpr::or(items.iter().map(concept).collect::<Result<_, _>>()?)),
            "ObjectComplementOf" => Ok(ConceptExpr::not(concept(&args(sx, 1)?[0])?)),
            "ObjectOneOf" => Ok(ConceptExpr::or(items.iter().map(|i| name(i).map(ConceptExpr::Nominal)).collect::<Result<_, _>>()?)),
            "DataOneOf" => Ok(ConceptExpr::DataNominal(literal(&args(sx, 1)?[0])?)),
            "ObjectAllValuesFrom" => {
                let a = args(sx, 2)?;
                Ok(ConceptExpr::all(name(&a[0])?, concept(&a[1])?))
            }
            "DataHasValue" => {
                let a = args(sx, 2)?;
                Ok(ConceptExpr::all(name(&a[0])?, ConceptExpr::DataNominal(literal(&a[1])?)))
            }
            "DataAllValuesFrom" => {
                let a = args(sx, 2)?;
                match &a[1] {
                    Sx::Atom(dt, ..) => Ok(ConceptExpr::DataAll(name(&a[0])?, dt.clone())),
                    other => {
                        let (l, c) = other.pos();
                        Err(ParseError::new(l, c, "expected a datatype"))
                    }
                }
            }
            _ => Err(ParseError::new(*l, *c, format!("unsupported class expression {h}"))),
        },
    }
}

fn owl_axiom(sx: &Sx) -> Result<Option<Axiom>, ParseError> {
    let Sx::List(h, _, l, c) = sx else {
        let (l, c) = sx.pos();
        return Err(ParseError::new(l, c, "expected an axiom"));
    };
    Ok(Some(match h.as_str() {
        "Declaration" | "Annotation" | "TransitiveObjectProperty" | "SubObjectPropertyOf" | "AnnotationAssertion" => return Ok(None),
        "SubClassOf" => {
            let a = args(sx, 2)?;
            Axiom::SubClassOf(concept(&a[0])?, concept(&a[1])?)
        }
        "EquivalentClasses" => {
            let a = args(sx, 2)?;
            Axiom::EquivalentTo(concept(&a[0])?, concept(&a[1])?)
        }
        "ClassAssertion" => {
            let a = args(sx, 2)?;
            Axiom::ConceptAssertion(concept(&a[0])?, name(&a[1])?)
        }
        "ObjectPropertyAssertion" => {
            let a = args(sx, 3)?;
            Axiom::RoleAssertion(name(&a[0])?, name(&a[1])?, name(&a[2])?)
        }
        "DataPropertyAssertion" => {
            let a = args(sx, 3)?;
            Axiom::DataAssertion(name(&a[0])?, name(&a[1])?, literal(&a[2])?)
        }
        "SameIndividual" => {
            let a = args(sx, 2)?;
            Axiom::same(name(&a[0])?, name(&a[1])?)
        }
        other => return Err(ParseError::new(*l, *c, format!("unsupported axiom {other}"))),
    }))
}

/// Reads files in the subset [`to_owl_functional`] writes.
pub fn parse_owl_functional(text: &str) -> Result<Ontology, ParseError> {
    let mut r = Reader { chars: text.chars().collect(), i: 0, line: 1, col: 1, _src: text };
    let mut onto = Ontology::new();
    while let Some(tok) = r.token()? {
        if tok.0 == "Prefix" {
            r.sexpr(tok)?;
            continue;
        }
        if tok.0 != "Ontology" {
            return Err(ParseError::new(tok.1, tok.2, format!("unexpected '{}'", tok.0)));
        }
        let Sx::List(_, items, ..) = r.sexpr(tok)? else { return Err(r.err("expected Ontology(...)")) };
        for item in &items {
            if let Sx::Atom(s, ..) = item {
                if s.starts_with('<') {
                    continue;
                }
            }
            if let Some(a) = owl_axiom(item)? {
                onto.add_axiom(a, None);
            }
        }
    }
    Ok(onto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serialize::parse_dl_text;

    #[test]
    fn single_subclass() {
        let o = parse_dl_text("Cat <= Animal").unwrap();
        let text = to_owl_functional(&o);
        assert!(text.contains("\nSubClassOf(:Cat :Animal)\n"));
        assert!(text.contains("Declaration(Class(:Animal))\nDeclaration(Class(:Cat))"));
    }

    #[test]
    fn reification_uses_all_values_from() {
        let o = parse_dl_text("BeautifulThing == all hasState . Beautiful").unwrap();
        assert!(to_owl_functional(&o).contains("EquivalentClasses(:BeautifulThing ObjectAllValuesFrom(:hasState :Beautiful))"));
    }

    #[test]
    fn round_trip_mixed() {
        let text = "\
FiveFootTallPerson == TallThing and all hasHeight . (Height and all hasUnit . (Feet and all hasValue . xsd:integer))
T == all hasHeight . (Height and all hasRank . (Rank and all hasValue . {1}))
U == all hasHeight . (Height and all hasRank . (Rank and all hasValue . {\"n\"}))
John : FiveFootTallPerson
hasHeight(John, H_John)
hasValue(ft_John, 5)
hasValue(r_John, \"m\")
School == all include . (Student or Teacher)
JohnUNIONJoe == {John} or {Joe}
HugeThing <= not (all PPR . HugeThing)
John = Joe
(A and not B) == bottom
X <= top
";
        let o = parse_dl_text(text).unwrap();
        let ofn = to_owl_functional(&o);
        assert!(ofn.contains("TransitiveObjectProperty(:include)"));
        assert!(ofn.contains("SubObjectPropertyOf(:hasHeight :hasDim)"));
        assert!(ofn.contains("DataHasValue(:hasValue \"1\"^^xsd:integer)"));
        let back = parse_owl_functional(&ofn).unwrap();
        assert!(back.same_axioms(&o));
        assert_eq!(to_owl_functional(&back), ofn);
    }

    #[test]
    fn errors_have_positions() {
        let e = parse_owl_functional("Ontology(<x>\nSubClassOf(:A)\n)").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_owl_functional("Ontology(<x> SubClassOf(:A :B)").is_err());
    }
}
