use std::collections::BTreeSet;

use lcoalg::coalgebra::Axiom;
use lcoalg::exactlinalg::{BasisSpace, Label, Scalar, ScalarError, Tensor, TensorVec};

use super::{AlgebraDecl, ChannelDecl, CoproductDecl, CounitDecl, Diagnostic, Directive, Document, SpaceDecl, ENTANGLE_KINDS};

const KEYWORDS: [&str; 7] = ["space", "coproduct", "counit", "algebra", "channel", "check", "entangle"];

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn quoted<I: IntoIterator<Item = S>, S: AsRef<str>>(items: I) -> Vec<String> {
    items.into_iter().map(|s| format!("`{}`", s.as_ref())).collect()
}

struct Cur<'a> {
    line: usize,
    s: &'a str,
    pos: usize,
}

impl<'a> Cur<'a> {
    fn col_at(&self, pos: usize) -> usize {
        self.s[..pos].chars().count() + 1
    }

    fn err_at(&self, pos: usize, message: impl Into<String>, expected: Vec<String>) -> Diagnostic {
        Diagnostic { line: self.line, column: self.col_at(pos), message: message.into(), expected }
    }

    fn err(&self, message: impl Into<String>, expected: Vec<String>) -> Diagnostic {
        self.err_at(self.pos, message, expected)
    }

    fn ws(&mut self) {
        let skip = self.s[self.pos..].len() - self.s[self.pos..].trim_start().len();
        self.pos += skip;
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, t: &str) -> bool {
        self.ws();
        if self.s[self.pos..].starts_with(t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &str) -> Result<(), Diagnostic> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{t}`, found {}", self.found()), quoted([t])))
        }
    }

    fn found(&self) -> String {
        match self.s[self.pos..].trim_start().chars().next() {
            None => "end of line".to_string(),
            Some(c) => format!("`{c}`"),
        }
    }

    /// An identifier and the byte position where it starts.
    fn ident(&mut self, what: &str) -> Result<(&'a str, usize), Diagnostic> {
        self.ws();
        let start = self.pos;
        let len: usize = self.s[start..].chars().take_while(|&c| is_ident(c)).map(char::len_utf8).sum();
        if len == 0 {
            return Err(self.err(format!("expected {what}, found {}", self.found()), vec![what.to_string()]));
        }
        self.pos += len;
        Ok((&self.s[start..start + len], start))
    }

    fn at_row_end(&mut self) -> bool {
        matches!(self.peek(), None | Some(';'))
    }

    fn end(&mut self) -> Result<(), Diagnostic> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected {}", self.found()), vec!["end of line".into()]))
        }
    }
}

fn label_in(cur: &mut Cur<'_>, space: &SpaceDecl) -> Result<Label, Diagnostic> {
    let (name, at) = cur.ident("a label")?;
    let l = Label::new(name);
    if space.labels.contains(&l) {
        Ok(l)
    } else {
        Err(cur.err_at(at, format!("unknown label `{name}` in space `{}`", space.name), quoted(space.labels.iter().map(Label::as_str))))
    }
}

fn tensor(cur: &mut Cur<'_>, arity: usize, space: &SpaceDecl, what: &str) -> Result<Tensor, Diagnostic> {
    let start = {
        cur.ws();
        cur.pos
    };
    cur.expect("<")?;
    let mut t = vec![label_in(cur, space)?];
    while cur.eat(",") {
        t.push(label_in(cur, space)?);
    }
    cur.expect(">")?;
    if t.len() != arity {
        let msg = format!("{what} terms take {arity} tensor factor{}, found {}", if arity == 1 { "" } else { "s" }, t.len());
        return Err(cur.err_at(start, msg, vec![format!("{arity} factors")]));
    }
    Ok(t)
}

fn scalar(cur: &Cur<'_>, start: usize, text: &str) -> Result<Scalar, Diagnostic> {
    text.parse::<Scalar>().map_err(|e| match e {
        ScalarError::Parse { offset, message } => cur.err_at(start + offset, format!("bad scalar: {message}"), vec!["scalar".into()]),
        other => cur.err_at(start, format!("bad scalar: {other}"), vec!["scalar".into()]),
    })
}

/// The coefficient in front of a tensor, up to the `*` that precedes `<`.
fn coefficient(cur: &mut Cur<'_>) -> Result<Scalar, Diagnostic> {
    if cur.peek() == Some('<') {
        return Ok(Scalar::one());
    }
    let start = cur.pos;
    let rest = &cur.s[start..];
    let mut depth = 0i32;
    let mut prev = None;
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => break,
            '+' | '-' if depth == 0 && i > 0 && prev != Some('^') => {
                return Err(cur.err_at(start + i, "compound coefficients must be parenthesised", vec!["`(`".into()]));
            }
            '*' if depth == 0 && rest[i + 1..].trim_start().starts_with('<') => {
                let v = scalar(cur, start, &rest[..i])?;
                cur.pos = start + i + 1;
                return Ok(v);
            }
            _ => {}
        }
        if !c.is_whitespace() {
            prev = Some(c);
        }
    }
    Err(cur.err_at(start, "expected a tensor `<…>` or `coefficient * <…>`", quoted(["<", "*"])))
}

fn terms(cur: &mut Cur<'_>, arity: usize, space: &SpaceDecl, what: &str) -> Result<TensorVec, Diagnostic> {
    let mut v = TensorVec::zero();
    if cur.peek() == Some('0') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.at_row_end() {
            return Ok(v);
        }
        cur.pos = save;
    }
    let mut first = true;
    loop {
        let neg = match cur.peek() {
            Some('-') => {
                cur.pos += 1;
                true
            }
            Some('+') if !first => {
                cur.pos += 1;
                false
            }
            _ if first => false,
            _ => break,
        };
        let c = coefficient(cur)?;
        let t = tensor(cur, arity, space, what)?;
        v.add_term(t, &if neg { -&c } else { c });
        first = false;
    }
    Ok(v)
}

#[derive(Clone, Copy)]
enum Block {
    Top,
    Coproduct(usize),
    Counit(usize),
    Algebra(usize),
    Channel(usize),
}

/// A name used by a directive, resolved once the document is complete.
struct Reference {
    line: usize,
    column: usize,
    name: String,
    channel: bool,
}

#[derive(Default)]
struct Parser {
    doc: Document,
    refs: Vec<Reference>,
    seen: BTreeSet<(usize, Label)>,
}

impl Parser {
    fn space(&self, cur: &Cur<'_>, name: &str, at: usize) -> Result<usize, Diagnostic> {
        self.doc
            .spaces
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| cur.err_at(at, format!("unknown space `{name}`"), quoted(self.doc.spaces.iter().map(|s| s.name.as_str()))))
    }

    fn header(&mut self, cur: &mut Cur<'_>, keyword: &str) -> Result<Block, Diagnostic> {
        match keyword {
            "space" => {
                let (name, at) = cur.ident("a space name")?;
                if self.doc.spaces.iter().any(|s| s.name == name) {
                    return Err(cur.err_at(at, format!("space `{name}` is declared twice"), vec![]));
                }
                cur.expect("=")?;
                cur.expect("{")?;
                let mut labels: Vec<Label> = Vec::new();
                if !cur.eat("}") {
                    loop {
                        let (l, at) = cur.ident("a label")?;
                        let l = Label::new(l);
                        if labels.contains(&l) {
                            return Err(cur.err_at(at, format!("label `{l}` is listed twice"), vec![]));
                        }
                        labels.push(l);
                        if cur.eat("}") {
                            break;
                        }
                        if !cur.eat(",") {
                            return Err(cur.err(format!("expected `,` or `}}`, found {}", cur.found()), quoted([",", "}"])));
                        }
                    }
                }
                cur.end()?;
                self.doc.spaces.push(SpaceDecl { name: name.to_string(), labels });
                Ok(Block::Top)
            }
            "coproduct" | "counit" | "algebra" => {
                let (name, at) = cur.ident("a name")?;
                cur.expect("on")?;
                let (sp, sat) = cur.ident("a space name")?;
                self.space(cur, sp, sat)?;
                cur.expect(":")?;
                let (name, space) = (name.to_string(), sp.to_string());
                let dup = |taken: bool| {
                    if taken {
                        Err(cur.err_at(at, format!("{keyword} `{name}` on `{space}` is declared twice"), vec![]))
                    } else {
                        Ok(())
                    }
                };
                Ok(match keyword {
                    "coproduct" => {
                        dup(self.doc.coproducts.iter().any(|c| c.name == name && c.space == space))?;
                        self.doc.coproducts.push(CoproductDecl { name, space, rows: Vec::new() });
                        Block::Coproduct(self.doc.coproducts.len() - 1)
                    }
                    "counit" => {
                        dup(self.doc.counits.iter().any(|c| c.name == name && c.space == space))?;
                        self.doc.counits.push(CounitDecl { name, space, values: Vec::new() });
                        Block::Counit(self.doc.counits.len() - 1)
                    }
                    _ => {
                        dup(self.doc.algebras.iter().any(|c| c.space == space))?;
                        self.doc.algebras.push(AlgebraDecl { name, space, products: Vec::new(), unit: TensorVec::zero() });
                        Block::Algebra(self.doc.algebras.len() - 1)
                    }
                })
            }
            "channel" => {
                let (name, at) = cur.ident("a channel name")?;
                if self.doc.channels.iter().any(|c| c.name == name) {
                    return Err(cur.err_at(at, format!("channel `{name}` is declared twice"), vec![]));
                }
                cur.expect(":")?;
                let (src, sat) = cur.ident("a space name")?;
                self.space(cur, src, sat)?;
                cur.expect("->")?;
                let (tgt, tat) = cur.ident("a space name")?;
                self.space(cur, tgt, tat)?;
                cur.expect(":")?;
                self.doc.channels.push(ChannelDecl { name: name.into(), source: src.into(), target: tgt.into(), rows: Vec::new() });
                Ok(Block::Channel(self.doc.channels.len() - 1))
            }
            "check" => {
                let (axiom, at) = cur.ident("an axiom id")?;
                if axiom.parse::<Axiom>().is_err() {
                    return Err(cur.err_at(at, format!("unknown axiom `{axiom}`"), quoted(Axiom::ALL.iter().map(|a| a.id()))));
                }
                let mut bindings = Vec::new();
                if cur.peek().is_some() {
                    loop {
                        let (role, _) = cur.ident("a role")?;
                        cur.expect("=")?;
                        let (name, nat) = cur.ident("a coproduct or counit name")?;
                        self.refs.push(Reference { line: cur.line, column: cur.col_at(nat), name: name.into(), channel: false });
                        bindings.push((role.to_string(), name.to_string()));
                        if !cur.eat(",") {
                            break;
                        }
                    }
                }
                cur.end()?;
                self.doc.directives.push(Directive::Check { axiom: axiom.into(), bindings });
                Ok(Block::Top)
            }
            _ => {
                let (kind, at) = cur.ident("an entanglement kind")?;
                if !ENTANGLE_KINDS.contains(&kind) {
                    return Err(cur.err_at(at, format!("unknown entanglement kind `{kind}`"), quoted(ENTANGLE_KINDS)));
                }
                let mut channel = None;
                if cur.eat("using") {
                    let (name, nat) = cur.ident("a channel name")?;
                    self.refs.push(Reference { line: cur.line, column: cur.col_at(nat), name: name.into(), channel: true });
                    channel = Some(name.to_string());
                }
                cur.end()?;
                self.doc.directives.push(Directive::Entangle { kind: kind.into(), channel });
                Ok(Block::Top)
            }
        }
    }

    fn once(&mut self, cur: &Cur<'_>, block: usize, l: &Label, at: usize) -> Result<(), Diagnostic> {
        if self.seen.insert((block, l.clone())) {
            Ok(())
        } else {
            Err(cur.err_at(at, format!("second row for `{l}`"), vec![]))
        }
    }

    fn space_decl(&self, name: &str) -> SpaceDecl {
        self.doc.spaces.iter().find(|s| s.name == name).cloned().expect("checked in the header")
    }

    fn row(&mut self, cur: &mut Cur<'_>, block: Block, id: usize) -> Result<(), Diagnostic> {
        cur.ws();
        let at = cur.pos;
        match block {
            Block::Top => unreachable!("rows are only parsed inside blocks"),
            Block::Coproduct(i) => {
                let sp = self.space_decl(&self.doc.coproducts[i].space);
                let l = label_in(cur, &sp)?;
                self.once(cur, id, &l, at)?;
                cur.expect("->")?;
                let v = terms(cur, 2, &sp, "coproduct")?;
                self.doc.coproducts[i].rows.push((l, v));
            }
            Block::Counit(i) => {
                let sp = self.space_decl(&self.doc.counits[i].space);
                let l = label_in(cur, &sp)?;
                self.once(cur, id, &l, at)?;
                cur.expect("->")?;
                cur.ws();
                let start = cur.pos;
                let len = cur.s[start..].find(';').unwrap_or(cur.s.len() - start);
                let text = &cur.s[start..start + len];
                if text.trim().is_empty() {
                    return Err(cur.err("expected a scalar", vec!["scalar".into()]));
                }
                let c = scalar(cur, start, text)?;
                cur.pos = start + len;
                self.doc.counits[i].values.push((l, c));
            }
            Block::Algebra(i) => {
                let sp = self.space_decl(&self.doc.algebras[i].space);
                let save = cur.pos;
                let (first, _) = cur.ident("a label or `unit`")?;
                if first == "unit" && cur.eat("->") {
                    self.once(cur, id, &Label::new("unit ->"), at)?;
                    self.doc.algebras[i].unit = terms(cur, 1, &sp, "algebra")?;
                } else {
                    cur.pos = save;
                    let x = label_in(cur, &sp)?;
                    cur.expect("*")?;
                    let y = label_in(cur, &sp)?;
                    self.once(cur, id, &Label::from(format!("{x}*{y}")), at)?;
                    cur.expect("->")?;
                    let v = terms(cur, 1, &sp, "algebra")?;
                    self.doc.algebras[i].products.push(((x, y), v));
                }
            }
            Block::Channel(i) => {
                let src = self.space_decl(&self.doc.channels[i].source);
                let tgt = self.space_decl(&self.doc.channels[i].target);
                let l = label_in(cur, &src)?;
                self.once(cur, id, &l, at)?;
                cur.expect("->")?;
                let v = terms(cur, 1, &tgt, "channel")?;
                self.doc.channels[i].rows.push((l, v));
            }
        }
        if cur.peek().is_some_and(|c| c != ';') {
            return Err(cur.err(format!("unexpected {}", cur.found()), quoted(["+", "-", ";"])));
        }
        Ok(())
    }

    fn rows(&mut self, cur: &mut Cur<'_>, block: Block, id: usize) -> Result<(), Diagnostic> {
        while cur.peek().is_some() {
            if cur.eat(";") {
                continue;
            }
            self.row(cur, block, id)?;
        }
        Ok(())
    }

    fn resolve(&self) -> Result<(), Diagnostic> {
        for r in &self.refs {
            let known = if r.channel {
                self.doc.channels.iter().any(|c| c.name == r.name)
            } else {
                self.doc.coproducts.iter().any(|c| c.name == r.name) || self.doc.counits.iter().any(|c| c.name == r.name)
            };
            if !known {
                let what = if r.channel { "channel" } else { "coproduct or counit" };
                let candidates: Vec<&str> = if r.channel {
                    self.doc.channels.iter().map(|c| c.name.as_str()).collect()
                } else {
                    self.doc.coproducts.iter().map(|c| c.name.as_str()).chain(self.doc.counits.iter().map(|c| c.name.as_str())).collect()
                };
                return Err(Diagnostic {
                    line: r.line,
                    column: r.column,
                    message: format!("unknown {what} `{}`", r.name),
                    expected: quoted(candidates),
                });
            }
        }
        Ok(())
    }
}

/// Parses a `.lcoalg` document. `#` starts a comment; a block header ending
/// in `:` may carry rows on the same line, and `;` separates rows.
pub fn parse_lcoalg(text: &str) -> Result<Document, Diagnostic> {
    let mut p = Parser::default();
    let mut block = Block::Top;
    let mut blocks = 0;
    for (i, raw) in text.lines().enumerate() {
        let s = raw.split('#').next().unwrap_or("");
        let mut cur = Cur { line: i + 1, s, pos: 0 };
        if cur.peek().is_none() {
            continue;
        }
        let save = cur.pos;
        let keyword = cur.ident("a declaration").ok().map(|(w, _)| w).filter(|w| KEYWORDS.contains(w));
        let header = keyword.is_some() && cur.peek().is_some_and(is_ident);
        if let (Some(k), true) = (keyword, header) {
            blocks += 1;
            block = p.header(&mut cur, k)?;
            if !matches!(block, Block::Top) {
                p.rows(&mut cur, block, blocks)?;
            }
            continue;
        }
        cur.pos = save;
        if matches!(block, Block::Top) {
            return Err(cur.err(format!("expected a declaration, found {}", cur.found()), quoted(KEYWORDS)));
        }
        p.rows(&mut cur, block, blocks)?;
    }
    p.resolve()?;
    Ok(p.doc)
}

/// The labels of a declared space as a basis.
pub(crate) fn basis(s: &SpaceDecl) -> BasisSpace {
    BasisSpace::new(s.labels.clone()).expect("labels are distinct")
}
