//! Link diagram input: planar diagram codes, Wirtinger presentations of link
//! groups, and Seifert matrices.

mod pd;
mod presentation;
mod seifert;
mod wirtinger;

pub use pd::PDCode;
pub use presentation::GroupPresentation;
pub use seifert::{SeifertMatrix, SurfaceKind};
pub use wirtinger::{wirtinger_presentation, WirtingerPresentation};
