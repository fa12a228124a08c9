pub mod error;
pub mod linalg;
pub mod rational;
pub mod rootdata;
pub mod isotropic;
pub mod atypicality;
pub mod reduction;
pub mod glmodel;
pub mod variety;
pub mod toolkit;
