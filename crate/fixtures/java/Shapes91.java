public class Shapes91 {
    public static int totalOf(int[] data) {
        int acc = 0;
        for (int j = 0; j < data.length; j++) {
            acc += data[j];
        }
        return acc;
    }

    public static void main(String[] args) {
        int[] numbers = {7, 5, 7, 9, 1, 9};
        System.out.println("Sum: " + totalOf(numbers));
    }
}
