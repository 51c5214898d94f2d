//! Counter-machine programs and their bijective numbering.
//!
//! Instructions are numbered by
//!
//! ```text
//! 0        HALT
//! 1..=4    INC r
//! 5..=8    DEC r
//! 9..=12   QUERY r
//! 13+k     JZ (k mod 4) zigzag(k div 4)      zigzag: 0, -1, 1, -2, 2, ...
//! ```
//!
//! and a sequence of instruction codes `c_1, ..., c_k` is numbered by the
//! binary word with one-bits at `b_1 = c_1`, `b_{i+1} = b_i + c_{i+1} + 1`.
//! Both maps are bijections, so every natural is the index of exactly one
//! program and the empty program has index 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const REGISTERS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Instr {
    Inc(u8),
    Dec(u8),
    /// Jump by `offset` if the register is zero, else fall through.
    Jz(u8, i64),
    /// Replace the register's value `v` by 1 if `v` is in the oracle, else 0.
    Query(u8),
    Halt,
}

impl Instr {
    pub fn code(self) -> u64 {
        match self {
            Instr::Halt => 0,
            Instr::Inc(r) => 1 + r as u64,
            Instr::Dec(r) => 5 + r as u64,
            Instr::Query(r) => 9 + r as u64,
            Instr::Jz(r, off) => {
                let z = if off >= 0 { 2 * off as u64 } else { 2 * off.unsigned_abs() - 1 };
                13 + 4 * z + r as u64
            }
        }
    }

    pub fn from_code(c: u64) -> Instr {
        match c {
            0 => Instr::Halt,
            1..=4 => Instr::Inc((c - 1) as u8),
            5..=8 => Instr::Dec((c - 5) as u8),
            9..=12 => Instr::Query((c - 9) as u8),
            _ => {
                let k = c - 13;
                let r = (k % 4) as u8;
                let z = k / 4;
                let off = if z.is_multiple_of(2) { (z / 2) as i64 } else { -(z.div_ceil(2) as i64) };
                Instr::Jz(r, off)
            }
        }
    }
}

impl fmt::Display for Instr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instr::Inc(r) => write!(f, "INC {r}"),
            Instr::Dec(r) => write!(f, "DEC {r}"),
            Instr::Jz(r, o) => write!(f, "JZ {r} {o}"),
            Instr::Query(r) => write!(f, "QUERY {r}"),
            Instr::Halt => write!(f, "HALT"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Program(pub Vec<Instr>);

impl Program {
    pub fn new(instrs: Vec<Instr>) -> Self {
        Program(instrs)
    }

    pub fn instrs(&self) -> &[Instr] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m` increments of register 0, then halt iff the resulting value is in
    /// the oracle (loop forever otherwise).
    pub fn query_constant(m: u64) -> Program {
        let mut v = vec![Instr::Inc(0); m as usize];
        v.extend([Instr::Query(0), Instr::Jz(0, 0), Instr::Halt]);
        Program(v)
    }

    /// Halts on input `m` iff `m` is in the oracle.
    pub fn query_input() -> Program {
        Program::query_constant(0)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.0 {
            writeln!(f, "{i}")?;
        }
        Ok(())
    }
}

fn parse_reg(tok: Option<&str>, line: usize) -> Result<u8> {
    let tok = tok.ok_or_else(|| Error::ParseProgram { line, msg: "missing register".into() })?;
    match tok.parse::<u8>() {
        Ok(r) if (r as usize) < REGISTERS => Ok(r),
        _ => Err(Error::ParseProgram { line, msg: format!("bad register `{tok}`") }),
    }
}

impl FromStr for Program {
    type Err = Error;

    /// One instruction per line; `#` starts a comment; blank lines are skipped.
    fn from_str(s: &str) -> Result<Program> {
        let mut out = Vec::new();
        for (n, raw) in s.lines().enumerate() {
            let line = n + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let mut toks = text.split_whitespace();
            let op = toks.next().unwrap().to_ascii_uppercase();
            let instr = match op.as_str() {
                "INC" => Instr::Inc(parse_reg(toks.next(), line)?),
                "DEC" => Instr::Dec(parse_reg(toks.next(), line)?),
                "QUERY" => Instr::Query(parse_reg(toks.next(), line)?),
                "HALT" => Instr::Halt,
                "JZ" => {
                    let r = parse_reg(toks.next(), line)?;
                    let off = toks
                        .next()
                        .and_then(|t| t.parse::<i64>().ok())
                        .ok_or_else(|| Error::ParseProgram { line, msg: "bad jump offset".into() })?;
                    Instr::Jz(r, off)
                }
                other => return Err(Error::ParseProgram { line, msg: format!("unknown opcode `{other}`") }),
            };
            if toks.next().is_some() {
                return Err(Error::ParseProgram { line, msg: "trailing tokens".into() });
            }
            out.push(instr);
        }
        Ok(Program(out))
    }
}

/// Decodes an index into its program. Total.
pub fn decode_program(e: u64) -> Program {
    let mut out = Vec::new();
    let mut prev: Option<u32> = None;
    let mut bits = e;
    while bits != 0 {
        let b = bits.trailing_zeros();
        bits &= bits - 1;
        let c = match prev {
            None => b as u64,
            Some(p) => (b - p - 1) as u64,
        };
        out.push(Instr::from_code(c));
        prev = Some(b);
    }
    Program(out)
}

/// Index of a program, or [`Error::IndexOverflow`] when it needs more than 64 bits.
pub fn encode_program(p: &Program) -> Result<u64> {
    let mut e: u64 = 0;
    let mut pos: Option<u64> = None;
    for &i in p.instrs() {
        let c = i.code();
        let b = match pos {
            None => c,
            Some(q) => q.checked_add(c).and_then(|x| x.checked_add(1)).ok_or(Error::IndexOverflow)?,
        };
        if b >= 64 {
            return Err(Error::IndexOverflow);
        }
        e |= 1 << b;
        pos = Some(b);
    }
    Ok(e)
}

/// Reads a program-universe file: programs separated by lines of `---`.
pub fn parse_program_list(s: &str) -> Result<Vec<Program>> {
    let mut progs = Vec::new();
    let mut chunk = String::new();
    let mut chunk_start = 1;
    for (n, line) in s.lines().enumerate() {
        if line.trim() == "---" {
            progs.push(parse_chunk(&chunk, chunk_start)?);
            chunk.clear();
            chunk_start = n + 2;
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    if !chunk.trim().is_empty() || !progs.is_empty() {
        progs.push(parse_chunk(&chunk, chunk_start)?);
    }
    Ok(progs)
}

fn parse_chunk(chunk: &str, offset: usize) -> Result<Program> {
    chunk.parse::<Program>().map_err(|e| match e {
        Error::ParseProgram { line, msg } => Error::ParseProgram { line: line + offset - 1, msg },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instruction_codes_are_bijective_on_prefix() {
        for c in 0..10_000 {
            assert_eq!(Instr::from_code(c).code(), c);
        }
        assert_eq!(Instr::Jz(0, 0).code(), 13);
        assert_eq!(Instr::Jz(1, -1).code(), 18);
    }

    #[test]
    fn base_cases() {
        assert_eq!(decode_program(0), Program::default());
        assert_eq!(encode_program(&Program(vec![Instr::Halt])).unwrap(), 1);
        assert_eq!(decode_program(6), Program(vec![Instr::Inc(0), Instr::Halt]));
    }

    #[test]
    fn text_format() {
        let src = "INC 0\nDEC 2 # comment\n\nJZ 1 -3\nQUERY 0\nHALT\n";
        let p: Program = src.parse().unwrap();
        assert_eq!(p.0, vec![Instr::Inc(0), Instr::Dec(2), Instr::Jz(1, -3), Instr::Query(0), Instr::Halt]);
        assert_eq!(p.to_string().parse::<Program>().unwrap(), p);
        assert!("INC 7".parse::<Program>().is_err());
        assert!("JMP 1".parse::<Program>().is_err());
        assert!("JZ 1".parse::<Program>().is_err());
    }

    #[test]
    fn program_lists() {
        let progs = parse_program_list("HALT\n---\n---\nINC 0\nHALT\n").unwrap();
        assert_eq!(progs.len(), 3);
        assert!(progs[1].is_empty());
        let err = parse_program_list("HALT\n---\nFOO\n").unwrap_err();
        assert_eq!(err, Error::ParseProgram { line: 3, msg: "unknown opcode `FOO`".into() });
    }

    #[test]
    fn overflow_is_reported() {
        let p = Program(vec![Instr::Jz(3, 100); 3]);
        assert_eq!(encode_program(&p), Err(Error::IndexOverflow));
    }
}
