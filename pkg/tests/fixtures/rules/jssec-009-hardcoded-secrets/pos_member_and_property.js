const vaultConfig = {
  passwd: "v4ult-m4ster-2024",
  region: "us-east-1",
};
connection.apiKey = "AKIAQ3EXAMPLE9F7";
