import { App } from "./app.js";

const app = new App();
document.body.append(app.el);
void app.show("reliability");
