//! Embedded example inputs.

pub const SO7_P3_PAPER: &str = include_str!("../fixtures/so7_p3_paper.json");
pub const SO7_P3_CORRECTED: &str = include_str!("../fixtures/so7_p3_corrected.json");
pub const GLXGL_NONCENTRAL: &str = include_str!("../fixtures/glxgl_noncentral.json");

pub fn by_name(name: &str) -> Option<&'static str> {
    match name {
        "so7_p3_paper" => Some(SO7_P3_PAPER),
        "so7_p3_corrected" => Some(SO7_P3_CORRECTED),
        "glxgl_noncentral" => Some(GLXGL_NONCENTRAL),
        _ => None,
    }
}

pub const NAMES: &[&str] = &["so7_p3_paper", "so7_p3_corrected", "glxgl_noncentral"];
