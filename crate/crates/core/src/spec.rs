//! Text format for permutation groups.
//!
//! ```text
//! group   := gens | regular | named | dsum | par | subdir
//! gens    := "gens" ":" word ("," word)* [";" "degree" ":" INT]
//! regular := "regular" ":" "[" INT ("," INT)* "]"
//! named   := ("cyclic" | "sym" | "alt" | "trivial") "(" INT ")"
//! dsum    := "dsum" "(" group ("," group)* ")"
//! par     := "par" "(" group "," INT ")"
//! subdir  := "subdir" "(" group "," group "," group "," group ","
//!            "[" [pair ("," pair)*] "]" ")"
//! pair    := word "->" word
//! word    := "id" | "()" | cycle+
//! ```
//!
//! Points are 1-based. Without `degree`, the degree is the largest point
//! named. `#` starts a comment. In `subdir(G1, H1, G2, H2, [..])` the pairs
//! `σ -> τ` mean `φ(σH₁) = τH₂`; they need only generate `G₁/H₁`.

use crate::error::{Error, Result};
use crate::lexer::{tokenize, Cursor, Tok};
use crate::perm::{self, parse_cycle_word, parse_raw_word, FactorIso, PermGroup};

/// Parses a group spec.
pub fn parse_group_spec(text: &str) -> Result<PermGroup> {
    let toks = tokenize(text)?;
    let mut cur = Cursor::new(&toks, text);
    let g = group(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    Ok(g)
}

/// `gens: …; degree: n` form of a group, using its generators.
pub fn format_group_spec(g: &PermGroup) -> String {
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
    let gens = if gens.is_empty() { "id".to_string() } else { gens.join(", ") };
    format!("gens: {gens}; degree: {}", g.degree())
}

fn starts_word(tok: Option<&Tok>) -> bool {
    matches!(tok, Some(Tok::LParen)) || matches!(tok, Some(Tok::Ident(s)) if s == "id")
}

fn group(cur: &mut Cursor<'_>) -> Result<PermGroup> {
    let (line, column) = cur.here();
    let name = match cur.peek() {
        Some(Tok::Ident(s)) => s.clone(),
        _ => return Err(cur.unexpected("a group expression")),
    };
    cur.next();
    let located = |e: Error| match e {
        Error::Domain(m) => Error::parse(line, column, m),
        other => other,
    };
    match name.as_str() {
        "gens" => {
            cur.expect(&Tok::Colon)?;
            let mut words = vec![parse_raw_word(cur)?];
            // a comma not followed by a word belongs to an enclosing expression
            while cur.peek() == Some(&Tok::Comma) && starts_word(cur.peek_at(1)) {
                cur.next();
                words.push(parse_raw_word(cur)?);
            }
            let degree = if cur.eat(&Tok::Semicolon) {
                match cur.peek() {
                    Some(Tok::Ident(s)) if s == "degree" => {
                        cur.next();
                        cur.expect(&Tok::Colon)?;
                        cur.expect_int()? as usize
                    }
                    _ => return Err(cur.unexpected("'degree'")),
                }
            } else {
                words.iter().map(|w| w.max_point()).max().unwrap_or(0) as usize
            };
            let gens = words.iter().map(|w| w.build(degree)).collect::<Result<Vec<_>>>()?;
            PermGroup::from_generators(degree, gens).map_err(located)
        }
        "regular" => {
            cur.expect(&Tok::Colon)?;
            cur.expect(&Tok::LBracket)?;
            let mut orders = vec![cur.expect_int()? as usize];
            while cur.eat(&Tok::Comma) {
                orders.push(cur.expect_int()? as usize);
            }
            cur.expect(&Tok::RBracket)?;
            perm::regular_group(&orders).map_err(located)
        }
        "cyclic" | "sym" | "alt" | "trivial" => {
            cur.expect(&Tok::LParen)?;
            let n = cur.expect_int()? as usize;
            cur.expect(&Tok::RParen)?;
            match name.as_str() {
                "cyclic" => PermGroup::cyclic(n),
                "sym" => PermGroup::symmetric(n),
                "alt" => PermGroup::alternating(n),
                _ => Ok(PermGroup::trivial(n)),
            }
            .map_err(located)
        }
        "dsum" => {
            cur.expect(&Tok::LParen)?;
            let mut acc = group(cur)?;
            while cur.eat(&Tok::Comma) {
                let next = group(cur)?;
                acc = perm::direct_sum(&acc, &next).map_err(located)?;
            }
            cur.expect(&Tok::RParen)?;
            Ok(acc)
        }
        "par" => {
            cur.expect(&Tok::LParen)?;
            let g = group(cur)?;
            cur.expect(&Tok::Comma)?;
            let k = cur.expect_int()? as usize;
            cur.expect(&Tok::RParen)?;
            perm::parallel_sum(&g, k).map_err(located)
        }
        "subdir" => {
            cur.expect(&Tok::LParen)?;
            let g1 = group(cur)?;
            cur.expect(&Tok::Comma)?;
            let h1 = group(cur)?;
            cur.expect(&Tok::Comma)?;
            let g2 = group(cur)?;
            cur.expect(&Tok::Comma)?;
            let h2 = group(cur)?;
            cur.expect(&Tok::Comma)?;
            cur.expect(&Tok::LBracket)?;
            let mut pairs = Vec::new();
            if cur.peek() != Some(&Tok::RBracket) {
                loop {
                    let s = parse_cycle_word(cur, g1.degree())?;
                    cur.expect(&Tok::Arrow)?;
                    let t = parse_cycle_word(cur, g2.degree())?;
                    pairs.push((s, t));
                    if !cur.eat(&Tok::Comma) {
                        break;
                    }
                }
            }
            cur.expect(&Tok::RBracket)?;
            cur.expect(&Tok::RParen)?;
            if h1.degree() != g1.degree() || h2.degree() != g2.degree() {
                return Err(located(Error::domain("kernel degree differs from its group")));
            }
            let iso = FactorIso::from_pairs(&g1, &h1, &g2, &h2, &pairs).map_err(located)?;
            perm::subdirect_sum(&g1, &h1, &g2, &h2, &iso).map_err(located)
        }
        _ => Err(Error::parse(
            line,
            column,
            format!("unknown group expression '{name}'"),
        )),
    }
}
