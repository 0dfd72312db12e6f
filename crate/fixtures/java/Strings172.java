public class Strings172 {
    public static void main(String[] args) {
        System.out.println("Hello Java");
    }
}
