document.write("<h1>Maintenance window</h1>");
document.writeln(promoBanner);
