//! Text format for framed braid words.
//!
//! A word is a whitespace-separated sequence of generators read bottom
//! to top: `t<i>` is the framing twist on the strand at position `i`,
//! `s<i>` the crossing of positions `i, i+1`. A generator may carry an
//! integer power: `s2^-1`, `t3^2`. Example: `t1 s1 s2^-1 t3^2`.

use std::fmt;

use gvcalc_core::braid::FramedBraid;

#[derive(Debug)]
pub struct BraidParseError {
    pub token: String,
    pub message: String,
}

impl fmt::Display for BraidParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad braid token `{}`: {}", self.token, self.message)
    }
}

impl std::error::Error for BraidParseError {}

fn err(token: &str, message: &str) -> BraidParseError {
    BraidParseError {
        token: token.to_string(),
        message: message.to_string(),
    }
}

/// Parses a braid word on the given strand count.
pub fn parse_braid(strands: usize, text: &str) -> Result<FramedBraid, BraidParseError> {
    let mut acc = FramedBraid::identity(strands);
    for token in text.split_whitespace() {
        let (head, power) = match token.split_once('^') {
            Some((h, p)) => (
                h,
                p.parse::<i64>()
                    .map_err(|_| err(token, "power must be an integer"))?,
            ),
            None => (token, 1),
        };
        let (kind, idx) = head.split_at(1);
        let i: usize = idx
            .parse()
            .map_err(|_| err(token, "generator index must be a positive integer"))?;
        let piece = match kind {
            "t" => {
                if i == 0 || i > strands {
                    return Err(err(token, "twist index out of range"));
                }
                FramedBraid::twist(strands, i, power)
            }
            "s" => {
                if i == 0 || i + 1 > strands {
                    return Err(err(token, "crossing index out of range"));
                }
                FramedBraid::generator(strands, i, power >= 0)
                    .pow(power.unsigned_abs() as i64)
                    .expect("same strand count")
            }
            _ => return Err(err(token, "expected `s<i>` or `t<i>`")),
        };
        acc = acc.then(&piece).expect("same strand count");
    }
    Ok(acc)
}

/// Renders a framed braid back to the text format (twists first).
pub fn braid_to_text(b: &FramedBraid) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &k) in b.twists().iter().enumerate() {
        if k == 1 {
            parts.push(format!("t{}", i + 1));
        } else if k != 0 {
            parts.push(format!("t{}^{}", i + 1, k));
        }
    }
    for &g in b.word() {
        if g > 0 {
            parts.push(format!("s{}", g));
        } else {
            parts.push(format!("s{}^-1", -g));
        }
    }
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join(" ")
    }
}
