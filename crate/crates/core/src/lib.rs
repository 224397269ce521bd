pub mod error;
pub mod graded;
pub mod lie;
pub mod report;
pub mod scalar;
pub mod operator;
pub mod weil;
pub mod gdga;
pub mod linalg;
pub mod weilmodel;
pub mod cartan;
pub mod brst;
pub mod cohomology;
