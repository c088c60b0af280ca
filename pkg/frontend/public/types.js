/** Wire types for the engine's line-delimited JSON session protocol. */
export {};
