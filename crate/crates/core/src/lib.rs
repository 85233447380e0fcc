pub mod dlmodel;
pub mod inflect;
pub mod lexicon;
pub mod tagger;
pub mod preprocess;
pub mod characterize;
pub mod translate;
pub mod serialize;
pub mod reason;
pub mod pipeline;
pub mod evaluate;
pub mod cli;
