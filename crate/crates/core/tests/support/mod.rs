pub mod kl_oracle;
