pub mod colorings;
pub mod decoders;
pub mod error;
pub mod largesets;
pub mod machines;
pub mod ramsey;

pub use error::{Error, Result};
pub use largesets::{enumerate_exactly_large, is_exactly_large, ExactlyLarge, FinSet};
