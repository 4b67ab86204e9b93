# Core module - signatures, finite algebras, terms and shared models
