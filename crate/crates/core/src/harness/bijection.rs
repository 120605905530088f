//! Text-in, text-out access to the bijections.

use crate::bijections::*;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Symbol};

/// Names accepted by [`run_bijection`].
pub const BIJECTIONS: &[&str] = &[
    "phi",
    "phi_inv",
    "psi",
    "psi_inv",
    "delta",
    "delta_inv",
    "hat_phi",
    "hat_phi_inv",
    "hat_psi",
    "hat_psi_inv",
    "west_f",
    "west_f_inv",
    "rsk",
    "rsk_inv",
    "descent_complement",
    "jaggard_swap",
];

#[derive(Clone, Debug, Default)]
pub struct BijectionParams {
    /// Pattern length for the rank map.
    pub k: Option<usize>,
    /// Tail `τ` for the swap, e.g. `"435"` or `"4 3 5"`.
    pub tail: Option<String>,
}

fn parse_tail(s: &str) -> Result<Vec<Symbol>> {
    let s = s.trim();
    let parts: Vec<&str> = if s.contains([' ', ',']) {
        s.split([' ', ',']).filter(|t| !t.is_empty()).collect()
    } else {
        s.split("").filter(|t| !t.is_empty()).collect()
    };
    parts
        .iter()
        .map(|t| t.parse::<Symbol>().map_err(|_| Error::Parse(format!("bad tail symbol {t:?}"))))
        .collect()
}

/// Applies the named map to `input` and renders the image.
pub fn run_bijection(name: &str, input: &str, params: &BijectionParams) -> Result<String> {
    let perm = || input.parse::<Permutation>();
    let word = || input.trim().parse::<MotzkinWord>();
    let k = || params.k.ok_or_else(|| Error::Parse(format!("{name} needs --k")));
    Ok(match name {
        "phi" => phi(&perm()?)?.to_string(),
        "phi_inv" => phi_inv(&word()?).to_string(),
        "psi" => psi(&perm()?)?.to_string(),
        "psi_inv" => psi_inv(&word()?).to_string(),
        "delta" => delta(&DiodWord::from_word(&word()?)?).to_string(),
        "delta_inv" => delta_inv(&word()?).to_word().to_string(),
        "hat_phi" => hat_phi(&perm()?)?.to_string(),
        "hat_phi_inv" => hat_phi_inv(&word()?).to_string(),
        "hat_psi" => hat_psi(&perm()?)?.to_string(),
        "hat_psi_inv" => hat_psi_inv(&word()?).to_string(),
        "west_f" => west_f(&perm()?, k()?)?.to_string(),
        "west_f_inv" => west_f_inv(&perm()?, k()?)?.to_string(),
        "rsk" => rsk(&perm()?)?.to_string(),
        "rsk_inv" => rsk_inv(&input.parse::<StandardTableau>()?).to_string(),
        "descent_complement" => descent_complement(&perm()?)?.to_string(),
        "jaggard_swap" => {
            let tail = params.tail.as_deref().ok_or_else(|| Error::Parse("jaggard_swap needs --tail".into()))?;
            jaggard_swap(&perm()?, &parse_tail(tail)?)?.to_string()
        }
        _ => return Err(Error::Unknown(format!("bijection {name:?} (expected one of {})", BIJECTIONS.join(", ")))),
    })
}
