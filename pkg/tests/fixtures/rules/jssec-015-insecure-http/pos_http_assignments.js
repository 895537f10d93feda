heroImage.src = "http://cdn.example.org/hero.jpg";
trackerConfig.url = "http://stats.example.org/collect";
submitForm.action = "http://forms.example.org/submit";
