//! The text format for cycle systems.
//!
//! ```text
//! genus=2
//! #@ source = hand-written
//! d = t(e1)^-1 t(b2) coords=[1,2,-1,-2]
//! system(a1; d, d)
//! ```
//!
//! A definition is a base curve (a name or a `coords=[..]` letter list) with
//! twists applied right to left. Lines starting with `#@` carry metadata; any
//! other `#` starts a comment. Names a1..ag, b1..bg and e1..e(g-1) are predefined.

use std::collections::HashMap;
use std::fmt::Write as _;

use blfkit_core::{CurveClass, CycleSystem, SurfaceModel, TwistWord};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Name(String),
    Coords(Vec<i64>),
}

/// `t(x1)^k1 t(x2)^k2 .. base`, applied as t_{x1}^{k1}(t_{x2}^{k2}(..(base))).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub twists: Vec<(String, i64)>,
    pub base: Base,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub genus: usize,
    pub metadata: Vec<(String, String)>,
    pub definitions: Vec<(String, Expr)>,
    pub c: String,
    pub cycles: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocError {
    #[error("{line}:{col}: parse error: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown name `{name}`")]
    UnknownName { line: usize, col: usize, name: String },
    #[error("{line}:{col}: {msg}")]
    GenusMismatch { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: c = `{name}` is separating")]
    CIsSeparating { line: usize, col: usize, name: String },
    #[error("{line}:{col}: `{name}` is not an essential simple closed curve: {msg}")]
    InvalidCurve { line: usize, col: usize, name: String, msg: String },
}

const RESERVED: [&str; 4] = ["t", "genus", "system", "coords"];

fn is_predefined(name: &str, genus: usize) -> bool {
    SurfaceModel::standard(genus, 0).is_ok_and(|m| m.generator(name).is_ok())
}

/// Looks like a generator name, whatever the genus.
fn generator_shaped(name: &str) -> bool {
    let mut ch = name.chars();
    matches!(ch.next(), Some('a' | 'b' | 'e'))
        && !name[1..].is_empty()
        && !name[1..].starts_with('0')
        && name[1..].bytes().all(|b| b.is_ascii_digit())
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn err(&self, msg: impl Into<String>) -> DocError {
        DocError::Parse { line: self.line, col: self.col(), msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), DocError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    /// Returns the identifier and its column.
    fn ident(&mut self) -> Result<(String, usize), DocError> {
        self.skip_ws();
        let col = self.col();
        let rest = &self.text[self.pos..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return Err(self.err("expected a name"));
        }
        self.pos += len;
        Ok((rest[..len].to_string(), col))
    }

    fn int(&mut self) -> Result<i64, DocError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected an integer"));
        }
        let v = rest[..sign + digits]
            .parse()
            .map_err(|_| self.err("integer out of range"))?;
        self.pos += sign + digits;
        Ok(v)
    }
}

/// Strip a trailing comment, leaving metadata lines to the caller.
fn content(line: &str) -> &str {
    line.find('#').map_or(line, |i| &line[..i])
}

struct Resolver {
    genus: usize,
    model: SurfaceModel,
    curves: HashMap<String, CurveClass>,
}

impl Resolver {
    fn lookup(&self, name: &str, line: usize, col: usize) -> Result<CurveClass, DocError> {
        if let Some(c) = self.curves.get(name) {
            return Ok(c.clone());
        }
        if let Ok(c) = self.model.generator(name) {
            return Ok(c);
        }
        if generator_shaped(name) {
            return Err(DocError::GenusMismatch {
                line,
                col,
                msg: format!("`{name}` does not exist at genus {}", self.genus),
            });
        }
        Err(DocError::UnknownName { line, col, name: name.to_string() })
    }
}

fn parse_expr(cur: &mut Cursor, r: &Resolver, name: &str) -> Result<(Expr, CurveClass), DocError> {
    let mut twists = Vec::new();
    let mut twist_curves = Vec::new();
    loop {
        cur.skip_ws();
        let rest = &cur.text[cur.pos..];
        let Some(after) = rest.strip_prefix('t') else { break };
        if !after.trim_start().starts_with('(') {
            break;
        }
        cur.pos += 1;
        cur.expect("(")?;
        let (x, xcol) = cur.ident()?;
        let curve = r.lookup(&x, cur.line, xcol)?;
        cur.expect(")")?;
        let k = if cur.eat("^") { cur.int()? } else { 1 };
        twists.push((x, k));
        twist_curves.push((curve, k));
    }
    cur.skip_ws();
    let (line, col) = (cur.line, cur.col());
    let (base, mut curve) = if cur.eat("coords") {
        cur.expect("=")?;
        cur.expect("[")?;
        let mut codes = Vec::new();
        if !cur.eat("]") {
            loop {
                codes.push(cur.int()?);
                if cur.eat("]") {
                    break;
                }
                cur.expect(",")?;
            }
        }
        let limit = 2 * r.genus as i64;
        if codes.iter().any(|&x| x == 0 || x.abs() > limit) {
            return Err(DocError::GenusMismatch {
                line,
                col,
                msg: format!("letter codes must lie in ±1..={limit} at genus {}", r.genus),
            });
        }
        let curve = CurveClass::from_codes(r.genus, &codes).map_err(|e| DocError::InvalidCurve {
            line,
            col,
            name: name.to_string(),
            msg: e.to_string(),
        })?;
        (Base::Coords(codes), curve)
    } else {
        let (id, col) = cur.ident()?;
        if RESERVED.contains(&id.as_str()) {
            return Err(DocError::Parse { line, col, msg: format!("`{id}` is reserved") });
        }
        let curve = r.lookup(&id, line, col)?;
        (Base::Name(id), curve)
    };
    for (x, k) in twist_curves.iter().rev() {
        curve = curve.dehn_twist(x, *k).map_err(|e| DocError::InvalidCurve {
            line,
            col,
            name: name.to_string(),
            msg: e.to_string(),
        })?;
    }
    Ok((Expr { twists, base }, curve))
}

/// A parsed document together with its resolved system.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub doc: Document,
    pub system: CycleSystem,
    /// Every defined or predefined name used, with its curve.
    pub curves: HashMap<String, CurveClass>,
}

pub fn parse(text: &str) -> Result<Parsed, DocError> {
    let mut genus = None;
    let mut metadata = Vec::new();
    let mut definitions: Vec<(String, Expr)> = Vec::new();
    let mut resolver: Option<Resolver> = None;
    let mut system = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let trimmed = raw.trim_start();
        if let Some(meta) = trimmed.strip_prefix("#@") {
            let col = raw.len() - trimmed.len() + 3;
            let (k, v) = meta.split_once('=').ok_or(DocError::Parse {
                line,
                col,
                msg: "metadata needs `key = value`".into(),
            })?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || !k.bytes().all(|b| b.is_ascii_alphanumeric() || b"_.-".contains(&b)) {
                return Err(DocError::Parse { line, col, msg: "bad metadata key".into() });
            }
            metadata.push((k.to_string(), v.to_string()));
            continue;
        }
        let mut cur = Cursor { line, text: content(raw), pos: 0 };
        if cur.at_end() {
            continue;
        }
        if system.is_some() {
            return Err(cur.err("nothing may follow the system line"));
        }
        let Some(r) = resolver.as_mut() else {
            let (kw, _) = cur.ident()?;
            if kw != "genus" {
                return Err(DocError::Parse { line, col: 1, msg: "expected `genus=INT` first".into() });
            }
            cur.expect("=")?;
            let g = cur.int()?;
            if !(1..=60).contains(&g) {
                return Err(DocError::GenusMismatch { line, col: 1, msg: format!("unsupported genus {g}") });
            }
            if !cur.at_end() {
                return Err(cur.err("unexpected text after genus"));
            }
            let g = g as usize;
            genus = Some(g);
            resolver = Some(Resolver {
                genus: g,
                model: SurfaceModel::standard(g, 0).expect("genus checked"),
                curves: HashMap::new(),
            });
            continue;
        };
        let (name, col) = cur.ident()?;
        if name == "system" && cur.peek() == Some('(') {
            cur.expect("(")?;
            let (c, ccol) = cur.ident()?;
            let cc = r.lookup(&c, line, ccol)?;
            if cc.is_separating() {
                return Err(DocError::CIsSeparating { line, col: ccol, name: c });
            }
            cur.expect(";")?;
            let mut names = Vec::new();
            let mut curves = Vec::new();
            if !cur.eat(")") {
                loop {
                    let (x, xcol) = cur.ident()?;
                    curves.push(r.lookup(&x, line, xcol)?);
                    names.push(x);
                    if cur.eat(")") {
                        break;
                    }
                    cur.expect(",")?;
                }
            }
            if !cur.at_end() {
                return Err(cur.err("unexpected text after system"));
            }
            let w = CycleSystem::new(cc, curves).map_err(|e| DocError::InvalidCurve {
                line,
                col,
                name: "system".into(),
                msg: e.to_string(),
            })?;
            r.curves.entry(c.clone()).or_insert_with(|| w.c().clone());
            system = Some((c, names, w));
            continue;
        }
        if RESERVED.contains(&name.as_str()) {
            return Err(DocError::Parse { line, col, msg: format!("`{name}` is reserved") });
        }
        if is_predefined(&name, r.genus) || r.curves.contains_key(&name) {
            return Err(DocError::Parse { line, col, msg: format!("`{name}` is already defined") });
        }
        cur.expect("=")?;
        let (expr, curve) = parse_expr(&mut cur, r, &name)?;
        if !cur.at_end() {
            return Err(cur.err("unexpected text after expression"));
        }
        r.curves.insert(name.clone(), curve);
        definitions.push((name, expr));
    }
    let (Some(genus), Some(r), Some((c, cycles, system))) = (genus, resolver, system) else {
        let msg = if genus.is_none() { "missing `genus=INT`" } else { "missing system line" };
        return Err(DocError::Parse { line: last.max(1), col: 1, msg: msg.into() });
    };
    let mut curves = r.curves;
    for x in &cycles {
        if let Ok(k) = r.model.generator(x) {
            curves.entry(x.clone()).or_insert(k);
        }
    }
    Ok(Parsed {
        doc: Document { genus, metadata, definitions, c, cycles },
        system,
        curves,
    })
}

fn print_codes(out: &mut String, codes: &[i64]) {
    out.push_str("coords=[");
    for (i, x) in codes.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}

pub fn print(doc: &Document) -> String {
    let mut out = format!("genus={}\n", doc.genus);
    for (k, v) in &doc.metadata {
        let _ = writeln!(out, "#@ {k} = {v}");
    }
    for (name, e) in &doc.definitions {
        let _ = write!(out, "{name} =");
        for (x, k) in &e.twists {
            match k {
                1 => {
                    let _ = write!(out, " t({x})");
                }
                _ => {
                    let _ = write!(out, " t({x})^{k}");
                }
            }
        }
        out.push(' ');
        match &e.base {
            Base::Name(n) => out.push_str(n),
            Base::Coords(c) => print_codes(&mut out, c),
        }
        out.push('\n');
    }
    let _ = writeln!(out, "system({}; {})", doc.c, doc.cycles.join(", "));
    out
}

/// The canonical document of a system: generators by name, every other curve
/// as a letter list, repeated curves defined once.
pub fn from_system(w: &CycleSystem, metadata: Vec<(String, String)>) -> Document {
    let model = SurfaceModel::standard(w.genus(), 0).expect("valid genus");
    let gens: Vec<(String, CurveClass)> = model
        .generator_names()
        .into_iter()
        .map(|n| {
            let c = model.generator(&n).expect("listed");
            (n, c)
        })
        .collect();
    let mut definitions: Vec<(String, Expr)> = Vec::new();
    let mut seen: Vec<(CurveClass, String)> = Vec::new();
    let mut name_of = |x: &CurveClass, fresh: String| -> String {
        if let Some((n, _)) = gens.iter().find(|(_, g)| g == x) {
            return n.clone();
        }
        if let Some((_, n)) = seen.iter().find(|(y, _)| y == x) {
            return n.clone();
        }
        definitions.push((fresh.clone(), Expr { twists: Vec::new(), base: Base::Coords(x.codes()) }));
        seen.push((x.clone(), fresh.clone()));
        fresh
    };
    let c = name_of(w.c(), "c".into());
    let cycles = w
        .cycles()
        .iter()
        .enumerate()
        .map(|(i, x)| name_of(x, format!("d{}", i + 1)))
        .collect();
    Document { genus: w.genus(), metadata, definitions, c, cycles }
}

/// Parse a twist word such as `t(a1) t(b2)^-1`, written as a product applied
/// right to left, against a document's names.
pub fn parse_word(text: &str, parsed: &Parsed) -> Result<TwistWord, DocError> {
    let genus = parsed.doc.genus;
    let r = Resolver {
        genus,
        model: SurfaceModel::standard(genus, 0).expect("valid genus"),
        curves: parsed.curves.clone(),
    };
    let mut cur = Cursor { line: 1, text, pos: 0 };
    let mut letters = Vec::new();
    while !cur.at_end() {
        let (id, col) = cur.ident()?;
        if id != "t" {
            return Err(DocError::Parse { line: 1, col, msg: "expected `t(NAME)`".into() });
        }
        cur.expect("(")?;
        let (x, xcol) = cur.ident()?;
        let curve = r.lookup(&x, 1, xcol)?;
        cur.expect(")")?;
        let k = if cur.eat("^") { cur.int()? } else { 1 };
        letters.push((curve, k));
    }
    TwistWord::from_letters(genus, letters).map_err(|e| cur.err(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "genus=2\n# comment\n#@ origin = test\nd = t(e1)^-1 t(b2) coords=[1,2,-1,-2]\nsystem(a1; d, d)\n";

    #[test]
    fn sample_round_trips() {
        let p = parse(SAMPLE).unwrap();
        assert_eq!(p.system.n(), 2);
        let text = print(&p.doc);
        assert_eq!(parse(&text).unwrap().doc, p.doc);
        assert!(text.starts_with("genus=2\n#@ origin = test\n"));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("genus=2\nx = t(zz) a1\nsystem(a1; x)\n").unwrap_err();
        assert_eq!(e, DocError::UnknownName { line: 2, col: 7, name: "zz".into() });
        let e = parse("genus=2\nsystem(a3; a1)\n").unwrap_err();
        assert!(matches!(e, DocError::GenusMismatch { line: 2, col: 8, .. }));
        let e = parse("genus=2\nh = coords=[1,2,-1,-2]\nsystem(h; a1)\n").unwrap_err();
        assert!(matches!(e, DocError::CIsSeparating { line: 3, col: 8, .. }));
        let e = parse("genus=2\nsystem(a1 a2)\n").unwrap_err();
        assert!(matches!(e, DocError::Parse { line: 2, col: 11, .. }));
        assert!(matches!(parse("system(a1; )\n"), Err(DocError::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_system() {
        let p = parse("genus=3\nsystem(b2; )\n").unwrap();
        assert_eq!(p.system.n(), 0);
        assert_eq!(print(&p.doc), "genus=3\nsystem(b2; )\n");
    }
}
