//! AST to pattern string, with minimal parentheses.
//!
//! Precedence is Repetition > Concat > Union. A Union under Concat or
//! Repetition, a Concat under Repetition, a multi-character Literal under
//! Repetition, and any same-kind nesting are grouped.

use super::ast::RegexAst;
use super::charset::CharSet;

const META: &[char] = &[
    '\\', '.', '^', '$', '*', '+', '?', '(', ')', '[', ']', '{', '}', '|',
];

pub fn serialize(ast: &RegexAst) -> String {
    let mut out = String::new();
    write_node(ast, &mut out);
    out
}

/// Pattern matching exactly the string `w`.
pub fn escape_literal(w: &str) -> String {
    let mut out = String::new();
    for c in w.chars() {
        push_escaped(c, &mut out);
    }
    out
}

fn push_control(c: char, out: &mut String) -> bool {
    match c {
        '\t' => out.push_str("\\t"),
        '\n' => out.push_str("\\n"),
        '\r' => out.push_str("\\r"),
        '\x0c' => out.push_str("\\f"),
        c if (c as u32) < 0x20 || c as u32 == 0x7f => {
            out.push_str(&format!("\\x{:02x}", c as u32))
        }
        _ => return false,
    }
    true
}

fn push_escaped(c: char, out: &mut String) {
    if push_control(c, out) {
        return;
    }
    if META.contains(&c) {
        out.push('\\');
    }
    out.push(c);
}

fn push_class_char(c: char, out: &mut String) {
    if push_control(c, out) {
        return;
    }
    if matches!(c, '\\' | ']' | '[' | '^' | '-') {
        out.push('\\');
    }
    out.push(c);
}

/// Named class when the set matches one exactly, else a bracket expression
/// of maximal runs (three or more consecutive codes become a range).
pub fn serialize_class(set: &CharSet) -> String {
    if let Some(name) = set.named() {
        return name.to_string();
    }
    if let Some(c) = set.single_char() {
        let mut out = String::new();
        push_escaped(c, &mut out);
        return out;
    }
    let codes: Vec<u32> = set.iter().map(|c| c as u32).collect();
    let mut out = String::from("[");
    let mut i = 0;
    while i < codes.len() {
        let mut j = i;
        while j + 1 < codes.len() && codes[j + 1] == codes[j] + 1 {
            j += 1;
        }
        let lo = char::from_u32(codes[i]).unwrap();
        let hi = char::from_u32(codes[j]).unwrap();
        if j - i >= 2 {
            push_class_char(lo, &mut out);
            out.push('-');
            push_class_char(hi, &mut out);
        } else {
            for code in &codes[i..=j] {
                push_class_char(char::from_u32(*code).unwrap(), &mut out);
            }
        }
        i = j + 1;
    }
    out.push(']');
    out
}

fn quantifier(min: u32, max: Option<u32>) -> String {
    match (min, max) {
        (0, None) => "*".into(),
        (1, None) => "+".into(),
        (0, Some(1)) => "?".into(),
        (m, None) => format!("{{{m},}}"),
        (m, Some(n)) if m == n => format!("{{{m}}}"),
        (m, Some(n)) => format!("{{{m},{n}}}"),
    }
}

fn write_grouped(ast: &RegexAst, out: &mut String) {
    out.push('(');
    write_node(ast, out);
    out.push(')');
}

fn write_node(ast: &RegexAst, out: &mut String) {
    match ast {
        RegexAst::Empty => {}
        RegexAst::Literal(s) => out.push_str(&escape_literal(s)),
        RegexAst::Class(set) => out.push_str(&serialize_class(set)),
        RegexAst::Concat(children) => {
            for child in children {
                match child {
                    RegexAst::Union(_) | RegexAst::Concat(_) | RegexAst::Empty => {
                        write_grouped(child, out)
                    }
                    _ => write_node(child, out),
                }
            }
        }
        RegexAst::Union(children) => {
            for (i, child) in children.iter().enumerate() {
                if i > 0 {
                    out.push('|');
                }
                match child {
                    RegexAst::Union(_) => write_grouped(child, out),
                    _ => write_node(child, out),
                }
            }
        }
        RegexAst::Repeat { child, min, max } => {
            let needs_group = match child.as_ref() {
                RegexAst::Literal(s) => s.chars().count() > 1,
                RegexAst::Class(_) => false,
                _ => true,
            };
            if needs_group {
                write_grouped(child, out);
            } else {
                write_node(child, out);
            }
            out.push_str(&quantifier(*min, *max));
        }
    }
}
