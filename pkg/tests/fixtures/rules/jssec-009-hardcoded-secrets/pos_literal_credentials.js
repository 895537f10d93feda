var dbPassword = "s3cr3t-pg-pass";
var apiKey = "AKIA0000EXAMPLE0000";
connectWarehouse(dbPassword, apiKey);
