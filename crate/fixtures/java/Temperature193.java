public class Temperature193
{
    public static void main(String[] args)
    {
        System.out.println("Hello Java");
    }
}
