fetch("http://api.example.com/v1/products");
var feed = new XMLHttpRequest();
feed.open("GET", "http://feeds.example.net/latest.xml");
