fetch("https://api.example.com/v1/products");
fetch("http://localhost:3000/dev/products");
fetch("http://127.0.0.1:8080/health");
probeSocket("http://[::1]:9229/json");
