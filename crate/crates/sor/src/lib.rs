//! Exact recognition and parametrization of surfaces of revolution given
//! by implicit rational equations.

pub mod algebra;
pub mod io;
pub mod lines;
pub mod rationality;
pub mod recognition;
